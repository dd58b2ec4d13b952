"""Character groups of subgroups and the restriction/induction calculus on them."""

from .dual import CharacterTable, CharRef, CharSet

__all__ = ["CharacterTable", "CharRef", "CharSet"]
