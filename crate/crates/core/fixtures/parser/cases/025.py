#!/usr/bin/env python
text = 'import fake_7'
total = (1 +
         2)  # trailing import comment
x = 1; import numpy,urllib.x
total = (1 +
         2)  # trailing import comment
from . urllib.core.x import (pyplot, client, parse as np, core)
