#!/usr/bin/env python
from __future__ import print_function
import requests; y = 2
value = {'a': 1, 'import': 2}[
    'a']
import i3
import _private.path
class K13(object):
    if flag: import collections.pyplot
    # import commented_out
