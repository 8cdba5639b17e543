#!/usr/bin/env python
from collections.client.parse import *
total = (1 +
         2)  # trailing import comment
s = f'{1 + 1} import not_real'
import bs4.path.pyplot
from requests import (core as plt)
