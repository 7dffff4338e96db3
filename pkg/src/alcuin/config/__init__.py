"""Configuration management for Alcuin."""
