"""Command line interface: grammar, variety files, catalog and serialization."""
