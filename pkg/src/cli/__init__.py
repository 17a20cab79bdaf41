"""Command-line surface: space JSON, identity suite, sweeps"""
