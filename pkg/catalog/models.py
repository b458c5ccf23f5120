from django.db import models


class CatalogEntry(models.Model):
    """Forma normal de una planarización con sus invariantes esperados"""

    FAMILY_CHOICES = [
        ('quadratic', 'Cuadrática'),
        ('cubic', 'Cúbica'),
        ('quadric-image', 'Imagen cuádrica'),
    ]

    label = models.CharField(max_length=10, unique=True)
    family = models.CharField(max_length=20, choices=FAMILY_CHOICES)
    components = models.JSONField(help_text='Cuatro componentes en (x, y, z)')
    surface_equation = models.CharField(max_length=255, blank=True)

    # Invariantes esperados
    map_degree = models.PositiveSmallIntegerField()
    surface_degree = models.PositiveSmallIntegerField()
    base_weight = models.PositiveSmallIntegerField(default=0)
    base_multiplicities = models.JSONField(default=list, blank=True)
    base_discs = models.JSONField(default=list, blank=True)
    topological_degree = models.PositiveSmallIntegerField()
    cotrivial = models.BooleanField(default=False)
    dual_degree = models.PositiveSmallIntegerField()
    dual_label = models.CharField(max_length=10, blank=True)

    notes = models.TextField(blank=True)
    order = models.PositiveSmallIntegerField(default=0)

    class Meta:
        db_table = 'catalog_entries'
        ordering = ['order']
        verbose_name = 'Forma normal'
        verbose_name_plural = 'Formas normales'

    def __str__(self):
        return f"({self.label}) [{' : '.join(self.components)}]"

    def as_dict(self):
        return {
            'label': self.label,
            'family': self.family,
            'components': self.components,
            'surfaceEquation': self.surface_equation or None,
            'expected': {
                'mapDegree': self.map_degree,
                'surfaceDegree': self.surface_degree,
                'baseWeight': self.base_weight,
                'baseMultiplicities': self.base_multiplicities,
                'baseDiscs': self.base_discs,
                'topologicalDegree': self.topological_degree,
                'cotrivial': self.cotrivial,
                'dualDegree': self.dual_degree,
            },
        }
