#!/usr/bin/env python
f = lambda x: x + 1
pass
