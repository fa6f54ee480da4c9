from sqlalchemy import Boolean, Column, DateTime, Integer, String, Text, UniqueConstraint

from src.database import Base

# Circuito mínimo encontrado pela busca para uma função reversível
class Witness(Base):
  __tablename__ = "witnesses"
  __table_args__ = (
    UniqueConstraint("kind", "convention", "function", name="uq_witness_function"),
    {'extend_existing': True},
  )

  id = Column(Integer, primary_key=True, index=True)
  kind = Column(String, nullable=False, index=True)
  convention = Column(String, nullable=False)
  function = Column(String, nullable=False, index=True)
  size = Column(Integer, nullable=False)
  gates = Column(Text, nullable=False)

class EnumerationRun(Base):
  __tablename__ = "enumeration_runs"
  __table_args__ = {'extend_existing': True}

  id = Column(Integer, primary_key=True, index=True)
  kind = Column(String, nullable=False, index=True)
  convention = Column(String, nullable=False)
  max_depth = Column(Integer, nullable=True)
  completed_depth = Column(Integer, nullable=False)
  complete = Column(Boolean, default=False)
  histogram = Column(Text, nullable=False)
  started_at = Column(DateTime, nullable=False)
  finished_at = Column(DateTime, nullable=True)
