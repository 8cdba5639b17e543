#!/usr/bin/env python
total = (1 +
         2)  # trailing import comment
import numpy; y = 2
