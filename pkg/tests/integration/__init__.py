"""Integration tests for the command line and end-to-end checks"""
