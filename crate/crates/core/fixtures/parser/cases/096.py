#!/usr/bin/env python
total = (1 +
         2)  # trailing import comment
from i3.client.core import (
    client as ux,
)
