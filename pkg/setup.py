from setuptools import find_packages, setup


setup(
    name='exact1q',
    version='1.0.0',
    platforms=['any'],
    license='MIT',
    packages=find_packages(include=['exact1q', 'exact1q.*']),
    python_requires='>=3.10',
    install_requires=[
        'click',
        'colorama',
        'numpy',
        'pydantic>=2',
        'sympy',
        'tabulate',
    ],
    tests_require=[
        'pytest',
        'hypothesis',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    entry_points='''
        [console_scripts]
        exact1q=exact1q.main:cli
    ''',
)
