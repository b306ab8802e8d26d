import os


class Settings:
    def __init__(self):
        self.cache_path: str = os.getenv("HZ_CACHE_PATH", "classnum.tsv")
        self.cache_enabled: bool = os.getenv("HZ_CACHE_ENABLED", "true").lower() == "true"
        self.workers: int = int(os.getenv("HZ_WORKERS", "1"))
        self.tolerance: float = float(os.getenv("HZ_TOLERANCE", "1e-10"))
        self.log_level: str = os.getenv("HZ_LOG_LEVEL", "WARNING").upper()
        self.paley_max_exceptions: int = int(os.getenv("HZ_PALEY_MAX_EXCEPTIONS", "20"))
    
    @property
    def cache_is_database(self) -> bool:
        return self.cache_path.startswith("sqlite:///") or self.cache_path.endswith(".db")
    
    def database_url(self) -> str:
        if self.cache_path.startswith("sqlite:///"):
            return self.cache_path
        return f"sqlite:///{self.cache_path}"


settings = Settings()
