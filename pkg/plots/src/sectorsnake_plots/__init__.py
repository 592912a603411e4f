__version__ = "0.1.0"

from .figures import FIGURES, render, render_all
from .schemas import SchemaError, load_table
