from app.util.cli.client import cli_service
from app.util.cli.handler import CommandHandler

__all__ = ["cli_service", "CommandHandler"]
