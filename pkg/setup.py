from setuptools import setup
from jhsiao.namespace import make_ns

make_ns('jhsiao')
setup(
    name='jhsiao-toric',
    version='0.0.1',
    author='Jason Hsiao',
    author_email='oaishnosaj@gmail.com',
    description='exact toric geometry: fans, divisors, Cox towers',
    packages=['jhsiao', 'jhsiao.toric'],
    install_requires=['sympy'],
    extras_require={'test': ['pytest']},
    entry_points={
        'console_scripts': ['jhsiao-toric=jhsiao.toric.cli:main']})
