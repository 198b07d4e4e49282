"""
PolyBasis - FastAPI Backend Main Application
Main entry point for the exact change-of-basis API server
"""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from utils import config

# Import route modules
from routes import catalog, converter, matrix_builder, verifier

config.configure_logging()

# Initialize FastAPI app
app = FastAPI(
    title="PolyBasis API",
    description="Exact change-of-basis matrices between polynomial bases",
    version="1.0.0"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include route routers
app.include_router(matrix_builder.router, prefix="/cob", tags=["Matrix Builder"])
app.include_router(converter.router, prefix="/cob", tags=["Converter"])
app.include_router(verifier.router, prefix="/cob", tags=["Verifier"])
app.include_router(catalog.router, prefix="/cob", tags=["Catalog"])


@app.get("/api")
async def root():
    """Index of the endpoints"""
    return {
        "message": "PolyBasis API is running!",
        "version": "1.0.0",
        "endpoints": {
            "matrix": "/cob/matrix",
            "convert": "/cob/convert",
            "verify": "/cob/verify",
            "families": "/cob/families"
        }
    }


@app.get("/health")
async def health():
    """Health check endpoint"""
    return {"status": "healthy"}


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host=config.API_HOST, port=config.API_PORT)
