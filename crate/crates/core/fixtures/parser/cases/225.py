#!/usr/bin/env python
raw = r'\import' + b'from x import y'.decode()
import collections.request
from requests.pyplot import (request, b_c as ux)
