#!/usr/bin/env python
from bs4.parse import (b_c)
if flag: import requests.client
from requests.parse import (
    b_c,
    x,
); y = 2
