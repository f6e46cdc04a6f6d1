"""Cross-cutting infrastructure: errors, settings, registry, logging."""
