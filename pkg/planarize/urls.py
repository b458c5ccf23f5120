"""
URL configuration for the planarize project.

Only the JSON API and the admin (catalog browsing) are exposed.
"""
from django.contrib import admin
from django.urls import path, include

urlpatterns = [
    path('api/', include('analysis.urls')),
    path('admin/', admin.site.urls),
]
