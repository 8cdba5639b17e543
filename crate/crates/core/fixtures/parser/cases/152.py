#!/usr/bin/env python
from __future__ import print_function
import yaml.core.request
from .. import client, \
    client as alias_1, Thing as plt, parse
