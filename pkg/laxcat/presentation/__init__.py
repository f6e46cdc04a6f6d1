"""
The `.fcat` presentation format: parser, elaborator and canonical
serializer.
"""

from .ast import PresentationDoc
from .elaborate import elaborate, elaborate_all, load_file, loads
from .parser import parse, parse_documents, tokenize
from .serialize import dumps, dumps_docs, serialize, serialize_doc

__all__ = [
    "PresentationDoc",
    "parse",
    "parse_documents",
    "tokenize",
    "elaborate",
    "elaborate_all",
    "loads",
    "load_file",
    "serialize",
    "serialize_doc",
    "dumps",
    "dumps_docs",
]
