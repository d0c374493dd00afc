"""Command implementations behind the ddvv entry point."""
