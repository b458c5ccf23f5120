from django.apps import AppConfig


class RatmapsConfig(AppConfig):
    name = 'ratmaps'
    verbose_name = 'Mapeos racionales'
