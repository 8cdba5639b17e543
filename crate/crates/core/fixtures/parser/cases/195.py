#!/usr/bin/env python
from _private.x.x import *
with ctx: import collections
while False: import json
