"""Unit tests for individual services and components"""
