import logging
from typing import Dict, Optional

from sqlalchemy import select
from sqlalchemy.orm import sessionmaker

from domain.repositories.class_number_repository import ClassNumberRepository
from infrastructure.database.base import create_tables, make_engine, make_session_factory
from infrastructure.database.models import ClassNumberModel


logger = logging.getLogger(__name__)


class SqlClassNumberRepository(ClassNumberRepository):
    def __init__(self, session_factory: sessionmaker):
        self.session_factory = session_factory
        self._pending: Dict[int, int] = {}
    
    @classmethod
    def from_url(cls, database_url: str) -> 'SqlClassNumberRepository':
        engine = make_engine(database_url)
        create_tables(engine)
        return cls(make_session_factory(engine))
    
    def get(self, discriminant: int) -> Optional[int]:
        if discriminant in self._pending:
            return self._pending[discriminant]
        with self.session_factory() as session:
            model = session.get(ClassNumberModel, discriminant)
            return model.class_number if model else None
    
    def add(self, discriminant: int, class_number: int) -> None:
        self._pending[discriminant] = class_number
    
    def all(self) -> Dict[int, int]:
        with self.session_factory() as session:
            stmt = select(ClassNumberModel).order_by(ClassNumberModel.discriminant.desc())
            entries = {model.discriminant: model.class_number for model in session.scalars(stmt)}
        entries.update(self._pending)
        return entries
    
    def flush(self) -> None:
        if not self._pending:
            return
        with self.session_factory() as session:
            try:
                for discriminant, class_number in self._pending.items():
                    session.merge(ClassNumberModel(discriminant=discriminant, class_number=class_number))
                session.commit()
            except Exception:
                session.rollback()
                raise
        logger.debug("Stored %d class numbers", len(self._pending))
        self._pending.clear()
