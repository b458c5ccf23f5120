from django.apps import AppConfig


class ScalarsConfig(AppConfig):
    name = 'scalars'
    verbose_name = 'Campos escalares'
