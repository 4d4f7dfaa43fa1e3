# Test collection wiring: mirror two_squares_ratio_test/manage.py so the
# Django-based suite runs under pytest.
import os

import django


os.environ.setdefault("DJANGO_SETTINGS_MODULE",
    "two_squares_ratio_test.settings")
django.setup()
