#!/usr/bin/env python
from __future__ import print_function
from ..matplotlib.x.x import (
    path,
    request as plt,
    b_c,
    a,
)
import json.pyplot.parse
