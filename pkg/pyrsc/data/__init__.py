"""Bundled triangulations in the .cplx text format"""
