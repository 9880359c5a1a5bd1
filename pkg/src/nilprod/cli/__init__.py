"""Manifest parsing, command execution and the ``nilprod`` entry point."""
from .manifest import (Command, Declaration, DuplicateName, KindMismatch, Manifest, ManifestError,
                       ManifestSyntaxError, UnresolvedReference, parse_manifest, serialise)
from .runner import SCHEMA, run, strip_timing

__all__ = ["Command", "Declaration", "DuplicateName", "KindMismatch", "Manifest", "ManifestError",
           "ManifestSyntaxError", "UnresolvedReference", "parse_manifest", "serialise", "SCHEMA", "run",
           "strip_timing"]
