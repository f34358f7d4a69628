# -*- coding: utf-8 -*-
"""
Shared helpers for the biersphere toolkit: configuration, exact rationals, JSON I/O.
"""
