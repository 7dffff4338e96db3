"""Application layer: CLI and output rendering."""
