#!/usr/bin/env python
from __future__ import print_function
from sys.core.pyplot import (Thing)
pass
from .  import (pyplot)
