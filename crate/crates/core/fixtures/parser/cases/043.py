#!/usr/bin/env python
total = (1 +
         2)  # trailing import comment
f = lambda x: x + 1
total = (1 +
         2)  # trailing import comment
import _private.request
with ctx: import json.parse
for i in []: import sys
