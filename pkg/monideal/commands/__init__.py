# Subcommands of the monideal command line
from . import agraded, monomials, verify

__all__ = ["agraded", "monomials", "verify"]
