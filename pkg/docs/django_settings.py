SECRET_KEY = "docs"
INSTALLED_APPS = [
    "django_zpcover",
]
