"""qform command-line interface."""
