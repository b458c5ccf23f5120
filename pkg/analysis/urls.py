from django.urls import path

from .views import analyze_view, catalog_detail, catalog_list

urlpatterns = [
    # Catálogo de formas normales
    path('catalog/', catalog_list, name='catalog-list'),
    path('catalog/<str:label>/', catalog_detail, name='catalog-detail'),

    # Análisis de un mapa
    path('analyze/', analyze_view, name='analyze'),
]
