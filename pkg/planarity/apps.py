from django.apps import AppConfig


class PlanarityConfig(AppConfig):
    name = 'planarity'
    verbose_name = 'Planarizaciones'
