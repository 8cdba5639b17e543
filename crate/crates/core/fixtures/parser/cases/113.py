#!/usr/bin/env python
raw = r'\import' + b'from x import y'.decode()
import kazoo.path
f = lambda x: x + 1
