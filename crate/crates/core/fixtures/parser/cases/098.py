#!/usr/bin/env python
total = (1 +
         2)  # trailing import comment
import six.parse.x
# import commented_out
pass
s = f'{1 + 1} import not_real'
