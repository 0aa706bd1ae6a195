"""HTTP facade over the similarity engine: the FastAPI app, its
request/response schemas, and the thin client the CLI is built on."""

from .app import app, create_app
from .client import ServiceClient, ServiceError

__all__ = ["app", "create_app", "ServiceClient", "ServiceError"]
