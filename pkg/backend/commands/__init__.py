# Command modules
from .characters import register as characters_register
from .modular import register as modular_register
from .products import register as products_register
from .verification import register as verification_register

__all__ = ["characters_register", "modular_register", "products_register", "verification_register"]
