from pydantic_settings import BaseSettings
from pathlib import Path
import logging

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    log_level: str = "WARNING"
    workers: int = 1
    max_recursion: int = 64
    memo_enabled: bool = True
    memo_max_entries: int = 500_000
    default_format: str = "text"

    class Config:
        # Busca o .env na raiz do projeto (um nível acima de backend/)
        env_file = Path(__file__).parent.parent / ".env"
        env_file_encoding = 'utf-8'
        env_prefix = "MODREP_"
        case_sensitive = False
        extra = "ignore"  # Ignora variáveis extras do .env


settings = Settings()

logger.info(f"✅ Configurações carregadas - workers={settings.workers}, max_recursion={settings.max_recursion}")
