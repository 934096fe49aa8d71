"""
Built-in worked examples with their expected check outcomes

Importing the package registers every entry.
"""
from src.catalog.registry import CatalogEntry, catalog_get, catalog_names, catalog_run, entry
from src.catalog import bicross, borel, braided, gl2, su2  # noqa: F401  (registration)

__all__ = [
    "CatalogEntry",
    "catalog_get",
    "catalog_names",
    "catalog_run",
    "entry",
]
