"""Decision procedures for inclusions of pp-pairs over Bezout domains."""

from .domains import KJO, QX, domain_of, get_domain

__all__ = ["KJO", "QX", "domain_of", "get_domain"]
