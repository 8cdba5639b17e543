#!/usr/bin/env python
total = (1 +
         2)  # trailing import comment
x = 1; import pandas as alias_1
