#include <string_view>

namespace entrain::detail {

// Default tagging lexicon in the plain-text lexicon file format.
extern const std::string_view builtin_lexicon_text = R"LEX(# DET
a	DET
an	DET
the	DET
this	DET
that	DET
these	DET
those	DET
each	DET
every	DET
some	DET
any	DET
no	DET
another	DET
either	DET
neither	DET
all	DET
both	DET
half	DET
such	DET
what	DET
which	DET
whatever	DET
whichever	DET
# PRON
i	PRON
me	PRON
my	PRON
mine	PRON
myself	PRON
you	PRON
your	PRON
yours	PRON
yourself	PRON
yourselves	PRON
he	PRON
him	PRON
his	PRON
himself	PRON
she	PRON
her	PRON
hers	PRON
herself	PRON
it	PRON
its	PRON
itself	PRON
we	PRON
us	PRON
our	PRON
ours	PRON
ourselves	PRON
they	PRON
them	PRON
their	PRON
theirs	PRON
themselves	PRON
who	PRON
whom	PRON
whose	PRON
one	PRON
ones	PRON
someone	PRON
somebody	PRON
something	PRON
anyone	PRON
anybody	PRON
anything	PRON
everyone	PRON
everybody	PRON
everything	PRON
nobody	PRON
nothing	PRON
none	PRON
there	PRON
i'll	PRON
i'm	PRON
i'd	PRON
i've	PRON
you're	PRON
you'll	PRON
you'd	PRON
you've	PRON
we're	PRON
we'll	PRON
we'd	PRON
we've	PRON
it's	PRON
it'll	PRON
that's	PRON
there's	PRON
here's	PRON
what's	PRON
they're	PRON
they'll	PRON
he's	PRON
she's	PRON
who's	PRON
# ADP
of	ADP
in	ADP
on	ADP
at	ADP
by	ADP
for	ADP
with	ADP
from	ADP
to	ADP
into	ADP
onto	ADP
about	ADP
above	ADP
below	ADP
under	ADP
over	ADP
after	ADP
before	ADP
between	ADP
through	ADP
during	ADP
without	ADP
within	ADP
among	ADP
against	ADP
along	ADP
around	ADP
across	ADP
near	ADP
towards	ADP
toward	ADP
behind	ADP
beside	ADP
besides	ADP
beyond	ADP
despite	ADP
except	ADP
inside	ADP
outside	ADP
since	ADP
until	ADP
till	ADP
upon	ADP
via	ADP
per	ADP
than	ADP
like	ADP
off	ADP
out	ADP
# CONJ
and	CONJ
or	CONJ
but	CONJ
nor	CONJ
so	CONJ
yet	CONJ
because	CONJ
although	CONJ
though	CONJ
while	CONJ
whereas	CONJ
unless	CONJ
whether	CONJ
if	CONJ
then	CONJ
however	CONJ
therefore	CONJ
also	CONJ
plus	CONJ
# PRT
not	PRT
n't	PRT
's	PRT
up	PRT
down	PRT
away	PRT
back	PRT
# ADV
very	ADV
too	ADV
quite	ADV
rather	ADV
just	ADV
only	ADV
still	ADV
already	ADV
always	ADV
never	ADV
often	ADV
sometimes	ADV
usually	ADV
really	ADV
maybe	ADV
perhaps	ADV
please	ADV
here	ADV
now	ADV
today	ADV
tomorrow	ADV
tonight	ADV
yesterday	ADV
soon	ADV
later	ADV
again	ADV
else	ADV
ever	ADV
even	ADV
more	ADV
most	ADV
less	ADV
least	ADV
well	ADV
much	ADV
how	ADV
when	ADV
where	ADV
why	ADV
exactly	ADV
approximately	ADV
almost	ADV
nearly	ADV
anywhere	ADV
somewhere	ADV
everywhere	ADV
instead	ADV
otherwise	ADV
actually	ADV
definitely	ADV
certainly	ADV
probably	ADV
unfortunately	ADV
currently	ADV
# VERB
is	VERB
am	VERB
are	VERB
was	VERB
were	VERB
be	VERB
been	VERB
being	VERB
do	VERB
does	VERB
did	VERB
doing	VERB
done	VERB
have	VERB
has	VERB
had	VERB
having	VERB
will	VERB
would	VERB
shall	VERB
should	VERB
can	VERB
could	VERB
may	VERB
might	VERB
must	VERB
need	VERB
needs	VERB
needed	VERB
want	VERB
wants	VERB
wanted	VERB
liked	VERB
get	VERB
gets	VERB
got	VERB
getting	VERB
go	VERB
goes	VERB
went	VERB
going	VERB
come	VERB
comes	VERB
came	VERB
make	VERB
makes	VERB
made	VERB
take	VERB
takes	VERB
took	VERB
give	VERB
gives	VERB
gave	VERB
find	VERB
finds	VERB
found	VERB
book	VERB
books	VERB
booked	VERB
look	VERB
looks	VERB
looked	VERB
help	VERB
helps	VERB
see	VERB
sees	VERB
saw	VERB
know	VERB
knows	VERB
knew	VERB
let	VERB
tell	VERB
told	VERB
say	VERB
said	VERB
think	VERB
thought	VERB
leave	VERB
leaves	VERB
left	VERB
arrive	VERB
arrives	VERB
arrived	VERB
depart	VERB
departs	VERB
departed	VERB
travel	VERB
travels	VERB
stay	VERB
stays	VERB
stayed	VERB
reserve	VERB
reserves	VERB
reserved	VERB
recommend	VERB
recommends	VERB
try	VERB
tries	VERB
tried	VERB
assist	VERB
assists	VERB
provide	VERB
prepared	VERB
leaving	VERB
arriving	VERB
departing	VERB
don't	VERB
doesn't	VERB
didn't	VERB
can't	VERB
won't	VERB
isn't	VERB
aren't	VERB
wasn't	VERB
weren't	VERB
couldn't	VERB
wouldn't	VERB
shouldn't	VERB
haven't	VERB
hasn't	VERB
let's	VERB
thank	VERB
thanks	VERB
sounds	VERB
sound	VERB
serves	VERB
serve	VERB
offers	VERB
offer	VERB
include	VERB
includes	VERB
check	VERB
checked	VERB
confirm	VERB
confirmed	VERB
require	VERB
requires	VERB
pay	VERB
costs	VERB
cost	VERB
call	VERB
contact	VERB
# NUM
zero	NUM
two	NUM
three	NUM
four	NUM
five	NUM
six	NUM
seven	NUM
eight	NUM
nine	NUM
ten	NUM
eleven	NUM
twelve	NUM
fifteen	NUM
twenty	NUM
thirty	NUM
forty	NUM
fifty	NUM
hundred	NUM
first	NUM
second	NUM
third	NUM
fourth	NUM
fifth	NUM
[value_count]	NUM
[value_time]	NUM
[value_price]	NUM
[value_reference]	NUM
[value_phone]	NUM
[value_postcode]	NUM
[value_pricerange]	NUM
[value_stars]	NUM
[value_people]	NUM
[value_stay]	NUM
[value_choice]	NUM
# ADJ
good	ADJ
great	ADJ
nice	ADJ
fine	ADJ
cheap	ADJ
expensive	ADJ
moderate	ADJ
free	ADJ
available	ADJ
new	ADJ
old	ADJ
other	ADJ
same	ADJ
different	ADJ
best	ADJ
better	ADJ
next	ADJ
last	ADJ
many	ADJ
few	ADJ
several	ADJ
certain	ADJ
nearby	ADJ
local	ADJ
open	ADJ
closed	ADJ
full	ADJ
wonderful	ADJ
perfect	ADJ
happy	ADJ
glad	ADJ
sure	ADJ
welcome	ADJ
correct	ADJ
right	ADJ
wrong	ADJ
able	ADJ
north	ADJ
south	ADJ
east	ADJ
west	ADJ
central	ADJ
centre	ADJ
international	ADJ
indian	ADJ
italian	ADJ
chinese	ADJ
british	ADJ
european	ADJ
asian	ADJ
modern	ADJ
popular	ADJ
interesting	ADJ
busy	ADJ
early	ADJ
late	ADJ
long	ADJ
short	ADJ
large	ADJ
small	ADJ
big	ADJ
little	ADJ
high	ADJ
low	ADJ
additional	ADJ
excellent	ADJ
# NOUN
reservation	NOUN
reservations	NOUN
booking	NOUN
bookings	NOUN
hotel	NOUN
hotels	NOUN
restaurant	NOUN
restaurants	NOUN
train	NOUN
trains	NOUN
taxi	NOUN
taxis	NOUN
attraction	NOUN
attractions	NOUN
hospital	NOUN
police	NOUN
guesthouse	NOUN
guesthouses	NOUN
house	NOUN
room	NOUN
rooms	NOUN
night	NOUN
nights	NOUN
day	NOUN
days	NOUN
week	NOUN
weeks	NOUN
time	NOUN
times	NOUN
ticket	NOUN
tickets	NOUN
people	NOUN
person	NOUN
party	NOUN
table	NOUN
tables	NOUN
price	NOUN
prices	NOUN
area	NOUN
areas	NOUN
part	NOUN
town	NOUN
city	NOUN
center	NOUN
station	NOUN
airport	NOUN
address	NOUN
phone	NOUN
number	NOUN
postcode	NOUN
reference	NOUN
car	NOUN
type	NOUN
food	NOUN
cuisine	NOUN
star	NOUN
stars	NOUN
parking	NOUN
wifi	NOUN
internet	NOUN
breakfast	NOUN
lunch	NOUN
dinner	NOUN
monday	NOUN
tuesday	NOUN
wednesday	NOUN
thursday	NOUN
friday	NOUN
saturday	NOUN
sunday	NOUN
morning	NOUN
afternoon	NOUN
evening	NOUN
information	NOUN
info	NOUN
departure	NOUN
departures	NOUN
destination	NOUN
arrival	NOUN
trip	NOUN
journey	NOUN
museum	NOUN
museums	NOUN
college	NOUN
colleges	NOUN
park	NOUN
parks	NOUN
pool	NOUN
theatre	NOUN
cinema	NOUN
church	NOUN
nightclub	NOUN
entertainment	NOUN
architecture	NOUN
boat	NOUN
place	NOUN
places	NOUN
option	NOUN
options	NOUN
choice	NOUN
choices	NOUN
name	NOUN
names	NOUN
fee	NOUN
entrance	NOUN
minutes	NOUN
minute	NOUN
hours	NOUN
hour	NOUN
pounds	NOUN
gbp	NOUN
cambridge	NOUN
london	NOUN
norwich	NOUN
ely	NOUN
stansted	NOUN
peterborough	NOUN
leicester	NOUN
kings	NOUN
lynn	NOUN
stevenage	NOUN
broxbourne	NOUN
bishops	NOUN
stortford	NOUN
birmingham	NOUN
yes	X
ok	X
okay	X
hi	X
hello	X
bye	X
goodbye	X
thank-you	NOUN
problem	NOUN
department	NOUN
[value_name]	NOUN
[value_area]	NOUN
[value_food]	NOUN
[value_place]	NOUN
[value_day]	NOUN
[value_address]	NOUN
[value_type]	NOUN
[value_department]	NOUN
[value_destination]	NOUN
[value_departure]	NOUN
[value_leave]	NOUN
[value_arrive]	NOUN
[value_car]	NOUN
#suffix
ing	VERB
ed	VERB
ize	VERB
ise	VERB
ify	VERB
ly	ADV
ward	ADV
wards	ADV
wise	ADV
tion	NOUN
sion	NOUN
ment	NOUN
ness	NOUN
ity	NOUN
ship	NOUN
ance	NOUN
ence	NOUN
ist	NOUN
ism	NOUN
er	NOUN
or	NOUN
s	NOUN
ery	NOUN
age	NOUN
ous	ADJ
ful	ADJ
able	ADJ
ible	ADJ
ive	ADJ
al	ADJ
ic	ADJ
est	ADJ
less	ADJ
ish	ADJ
ant	ADJ
ent	ADJ
ary	ADJ
y	ADJ
)LEX";

} // namespace entrain::detail
