"""
Infrastructure Layer
Handles external dependencies: file I/O, storage, configuration
"""
