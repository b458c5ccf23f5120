from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CatalogEntry',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('label', models.CharField(max_length=10, unique=True)),
                ('family', models.CharField(choices=[('quadratic', 'Cuadrática'), ('cubic', 'Cúbica'), ('quadric-image', 'Imagen cuádrica')], max_length=20)),
                ('components', models.JSONField(help_text='Cuatro componentes en (x, y, z)')),
                ('surface_equation', models.CharField(blank=True, max_length=255)),
                ('map_degree', models.PositiveSmallIntegerField()),
                ('surface_degree', models.PositiveSmallIntegerField()),
                ('base_weight', models.PositiveSmallIntegerField(default=0)),
                ('base_multiplicities', models.JSONField(blank=True, default=list)),
                ('base_discs', models.JSONField(blank=True, default=list)),
                ('topological_degree', models.PositiveSmallIntegerField()),
                ('cotrivial', models.BooleanField(default=False)),
                ('dual_degree', models.PositiveSmallIntegerField()),
                ('dual_label', models.CharField(blank=True, max_length=10)),
                ('notes', models.TextField(blank=True)),
                ('order', models.PositiveSmallIntegerField(default=0)),
            ],
            options={
                'verbose_name': 'Forma normal',
                'verbose_name_plural': 'Formas normales',
                'db_table': 'catalog_entries',
                'ordering': ['order'],
            },
        ),
    ]
