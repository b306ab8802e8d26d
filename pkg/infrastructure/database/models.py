from sqlalchemy import Column, DateTime, Integer
from sqlalchemy.sql import func

from infrastructure.database.base import Base


class ClassNumberModel(Base):
    __tablename__ = "class_numbers"
    
    discriminant = Column(Integer, primary_key=True, autoincrement=False)
    class_number = Column(Integer, nullable=False)
    created_at = Column(DateTime(timezone=True), server_default=func.now(), nullable=False)
