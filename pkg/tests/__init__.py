"""Test suite for dlab"""
