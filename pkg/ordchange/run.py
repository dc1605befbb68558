#!/usr/bin/env python3
"""Entry point for running the FastAPI server"""
import uvicorn

from ordchange.config import SERVICE_CONFIG, configure_logging

if __name__ == "__main__":
    configure_logging()
    uvicorn.run("ordchange.main:app", host=SERVICE_CONFIG["host"], port=SERVICE_CONFIG["port"])
