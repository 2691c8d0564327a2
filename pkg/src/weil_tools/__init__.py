"""Command-line front end: subcommands over the library packages and the acceptance report."""
