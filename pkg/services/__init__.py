"""Services module for qform: exact algebra of binary quadratic forms."""
from services.errors import QFormError

__all__ = ["QFormError"]
