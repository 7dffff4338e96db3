"""Tests directory for Alcuin."""
