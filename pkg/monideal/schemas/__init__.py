# Pydantic schemas package for monideal
from .report_schema import ComputationReport, StageReport

__all__ = ["ComputationReport", "StageReport"]
