"""
Data validation models for laxcat.

This module provides Pydantic BaseModel classes for raw data entering
the engine: category tables handed to ``validate_category`` (from code,
JSON or the presentation elaborator).
"""

from typing import Dict, List

from pydantic import BaseModel, Field, field_validator

from laxcat.core.utils.naming import is_valid_name

# ============================================================================
# RAW CATEGORY DATA
# ============================================================================


class MorphismDecl(BaseModel):
    """
    A declared morphism.

    Attributes:
        name: Morphism name
        dom: Domain object name
        cod: Codomain object name
    """

    name: str
    dom: str
    cod: str


class CompositeDecl(BaseModel):
    """A composition table entry ``g after f = result``."""

    g: str
    f: str
    result: str


class RawCategory(BaseModel):
    """
    Unvalidated category data.

    Identity morphisms may be listed in ``morphisms`` (then ``identities``
    must name them) or omitted, in which case ``id_<object>`` is created.
    Composites with an identity factor may be omitted; they are forced.

    Attributes:
        name: Category name
        objects: Objects in declaration order
        morphisms: Morphism declarations in declaration order
        identities: Object -> identity morphism name
        composites: Composition table entries
    """

    name: str
    objects: List[str] = Field(default_factory=list)
    morphisms: List[MorphismDecl] = Field(default_factory=list)
    identities: Dict[str, str] = Field(default_factory=dict)
    composites: List[CompositeDecl] = Field(default_factory=list)

    @field_validator("objects")
    @classmethod
    def _check_object_names(cls, objects: List[str]) -> List[str]:
        for obj in objects:
            if not is_valid_name(obj):
                raise ValueError(f"invalid object name: {obj!r}")
        return objects
