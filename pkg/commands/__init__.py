# -*- coding: utf-8 -*-
"""
Command adapters for the biersphere CLI.
Each module turns parsed arguments into one library call and a JSON-ready dict.
"""
