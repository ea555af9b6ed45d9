# utils/__init__.py - logging and text formats

from .logger import logger
from .formats import (
    parse_edge_list,
    serialize_edge_list,
    parse_list_assignment,
    serialize_list_assignment,
    parse_coloring,
    serialize_coloring,
)

__all__ = [
    'logger',
    'parse_edge_list', 'serialize_edge_list',
    'parse_list_assignment', 'serialize_list_assignment',
    'parse_coloring', 'serialize_coloring',
]
