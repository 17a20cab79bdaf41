"""Absolute sums X (+)_N Y and nabla-point transfer checks"""
