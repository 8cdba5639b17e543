#!/usr/bin/env python
if cond:
    from urllib.client.client import (parse, Thing, client, Thing)
    raw = r'\import' + b'from x import y'.decode()
from ..numpy.request import path as pd, client as plt, b_c, a; y = 2
