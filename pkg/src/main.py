import uvicorn, sys
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from dotenv import load_dotenv

from src.utils import dotenv, logger

load_dotenv()
settings = dotenv.validate_dotenv()
logger.configure_logging(settings.log_level)

from src.controller import circuitController, searchController
from src.database import engine
from src.model import witnessModel

witnessModel.Base.metadata.create_all(bind=engine)

app = FastAPI()

app.add_middleware(
  CORSMiddleware,
  allow_origins=["*"],
  allow_credentials=True,
  allow_methods=["*"],
  allow_headers=["*"],
)

# Routers
app.include_router(prefix="/api", router=circuitController.circuit)
app.include_router(prefix="/api", router=searchController.search)

@app.get("/")
def read_root():
  return {"message": "LNN synthesis service"}

if __name__ == '__main__': # pragma: no cover
  port = 8000
  if (len(sys.argv) == 2):
    port = sys.argv[1]

  uvicorn.run('src.main:app', reload=True, port=int(port), host="0.0.0.0")
