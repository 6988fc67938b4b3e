from django.apps import AppConfig

from .bootstrap import app_bootstrapper


class DjangoZpcoverConfig(AppConfig):
    name = "django_zpcover"
    verbose_name = "Z_p covering families"

    def ready(self):
        app_bootstrapper.run()
