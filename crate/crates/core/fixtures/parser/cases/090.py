#!/usr/bin/env python
if flag: import _private as plt
import urllib; y = 2
