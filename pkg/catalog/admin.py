from django.contrib import admin
from .models import CatalogEntry


@admin.register(CatalogEntry)
class CatalogEntryAdmin(admin.ModelAdmin):
    """Configuración del admin para el modelo CatalogEntry"""

    list_display = ('label', 'family', 'map_degree', 'surface_degree', 'base_weight',
                    'topological_degree', 'cotrivial', 'dual_degree')
    list_filter = ('family', 'map_degree', 'cotrivial')
    search_fields = ('label', 'notes')
    ordering = ('order',)

    fieldsets = (
        ('Forma normal', {
            'fields': ('label', 'family', 'components', 'surface_equation', 'order')
        }),
        ('Invariantes esperados', {
            'fields': ('map_degree', 'surface_degree', 'base_weight', 'base_multiplicities',
                       'base_discs', 'topological_degree', 'cotrivial', 'dual_degree', 'dual_label')
        }),
        ('Notas', {
            'fields': ('notes',),
            'classes': ('collapse',)
        }),
    )
