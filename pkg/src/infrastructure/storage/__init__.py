"""Run record storage backend layer"""
