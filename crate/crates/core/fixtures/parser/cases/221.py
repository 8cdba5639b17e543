#!/usr/bin/env python
from .. six.request.parse import (
    path as plt,
)
s = f'{1 + 1} import not_real'
total = (1 +
         2)  # trailing import comment
