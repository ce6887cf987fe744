from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    DEFAULT_ORDER: str = "grevlex"
    DEFAULT_FIELD: str = "QQ"

    EXPONENT_BOUND: int = 2**31 - 1
    MAX_PRIME: int = 2**31

    ORACLE_DEGREE_SMALL: int = 8
    ORACLE_DEGREE_LARGE: int = 6
    ORACLE_DEGREE_FALLBACK: int = 4

    LOG_LEVEL: str = "WARNING"
    LOG_JSON: bool = True

    model_config = SettingsConfigDict(env_file=".env", env_prefix="MONIDEAL_")


settings = Settings()
