// (nu, x, J_nu(x), Y_nu(x)) from mpmath at 30 digits
pub(super) const BESSEL_TABLE: [(f64, f64, f64, f64); 182] = [
    (0.0, 0.001, 0.999999750000015625, -4.4714166113759232557),
    (0.0, 0.1, 0.997501562066040032, -1.5342386513503668083),
    (0.0, 0.5, 0.93846980724081290423, -0.44451873350670655715),
    (0.0, 1.0, 0.76519768655796655145, 0.088256964215676957983),
    (0.0, 1.9, 0.28181855937438552233, 0.49681997128382019129),
    (0.0, 2.0, 0.22389077914123566805, 0.5103756726497451196),
    (0.0, 2.1, 0.16660698033199027613, 0.5182937375137607332),
    (0.0, 5.0, -0.17759677131433830435, -0.30851762524903378007),
    (0.0, 10.0, -0.2459357644513483352, 0.055671167283599391424),
    (0.0, 17.5, -0.10311039822868592217, -0.16041119250501116909),
    (0.0, 30.0, -0.086367983581040211336, -0.11729573168666402525),
    (0.0, 50.0, 0.055812327669251815005, -0.098064995470077079029),
    (0.0, 75.0, 0.034643913805097056137, -0.085369047647775609895),
    (0.0, 100.0, 0.019985850304223122424, -0.077244313365083152254),
    (0.3, 0.001, 0.11393853750601629263, -9.2295409955848663876),
    (0.3, 0.1, 0.45272574599459660724, -2.0018779347994433763),
    (0.3, 0.5, 0.70026048850705467274, -0.80804750747749088984),
    (0.3, 1.0, 0.74022247928102045347, -0.24570419535649944185),
    (0.3, 1.9, 0.47201364515549976038, 0.3264495413759294865),
    (0.3, 2.0, 0.4256940619814137223, 0.36348280782609224042),
    (0.3, 2.1, 0.37757797436499910248, 0.39524452976855305533),
    (0.3, 5.0, -0.29682911012576075751, -0.19705687911614494825),
    (0.3, 10.0, -0.19461921545691323779, 0.16042192864791389021),
    (0.3, 17.5, -0.16446193933831278349, -0.096545791071061102037),
    (0.3, 30.0, -0.13011079142417547186, -0.0654977719411215792),
    (0.3, 50.0, 0.0053100391078477346356, -0.11271109864982047552),
    (0.3, 75.0, -0.0078337430844738668392, -0.091797469538211230859),
    (0.3, 100.0, -0.017225645932780616608, -0.0779065075878701167),
    (0.5, 0.001, 0.025231321014980940973, -25.231312604540041424),
    (0.5, 0.1, 0.25189294032600095267, -2.5105273689585092433),
    (0.5, 0.5, 0.54097378993452809133, -0.99024588024340488002),
    (0.5, 1.0, 0.67139670714180309042, -0.43109886801837607952),
    (0.5, 1.9, 0.54776230368286477138, 0.18713496934630297329),
    (0.5, 2.0, 0.51301613656182775167, 0.23478571040624846917),
    (0.5, 2.1, 0.47527673764375996115, 0.27796455747216346507),
    (0.5, 5.0, -0.34216798479816180976, -0.10121770918510839957),
    (0.5, 10.0, -0.13726373575505048121, 0.21170886633139815292),
    (0.5, 17.5, -0.18608201711405906758, -0.041853979661221729176),
    (0.5, 30.0, -0.14392965337039988914, -0.022470290598831024825),
    (0.5, 50.0, -0.029605831888924612568, -0.10888475635053954314),
    (0.5, 75.0, -0.035727009681702580969, -0.084922578922046881542),
    (0.5, 100.0, -0.040402132716252123744, -0.068803091468728083746),
    (1.0, 0.001, 0.00049999993750000261457, -636.62216723113941482),
    (1.0, 0.1, 0.049937526036242000321, -6.4589510947020266377),
    (1.0, 0.5, 0.24226845767487388638, -1.4714723926702430692),
    (1.0, 1.0, 0.44005058574493351596, -0.78121282130028871655),
    (1.0, 1.9, 0.58115707271343407482, -0.16440577233159531443),
    (1.0, 2.0, 0.5767248077568733872, -0.10703243154093754689),
    (1.0, 2.1, 0.5682921357570386593, -0.051678612130423533848),
    (1.0, 5.0, -0.32757913759146522204, 0.1478631433912268448),
    (1.0, 10.0, 0.04347274616886143667, 0.24901542420695388392),
    (1.0, 17.5, -0.16341996942575490589, 0.098572798734216046215),
    (1.0, 30.0, -0.11875106261662293652, 0.084425570661747234891),
    (1.0, 50.0, -0.097511828125175137661, -0.056795668562014767942),
    (1.0, 75.0, -0.085139995044829103941, -0.035213785160580485664),
    (1.0, 100.0, -0.077145352014112158033, -0.020372312002759793305),
    (1.5, 0.001, 8.410440899023056454e-6, -25231.33783586105588),
    (1.5, 0.1, 0.0084020343015001435986, -25.357166629911091992),
    (1.5, 0.5, 0.091701699625651302638, -2.5214655504213378514),
    (1.5, 1.0, 0.2402978391234270109, -1.1024955751601791699),
    (1.5, 1.9, 0.47543091865307391908, -0.44927021455323162293),
    (1.5, 2.0, 0.49129377868716234501, -0.39562328135870351708),
    (1.5, 2.1, 0.50428681349300153224, -0.34291266265701545957),
    (1.5, 5.0, -0.16965130614474076152, 0.32192444296114012985),
    (1.5, 10.0, 0.1979824927558931048, 0.1584346223881902965),
    (1.5, 17.5, -0.052487237782025104466, 0.18369036113341782591),
    (1.5, 30.0, -0.027267945711177687796, 0.14318064368377218831),
    (1.5, 50.0, -0.10947687298831803539, 0.027428136761913821705),
    (1.5, 75.0, -0.085398939051136249289, 0.034594708629408622549),
    (1.5, 100.0, -0.069207112795890604984, 0.039714101801564842906),
    (1.7320508075688772, 0.001, 1.2089769411735838391e-6, -152009.80114714184407),
    (1.7320508075688772, 0.1, 0.003516593886448173381, -52.392556273409875084),
    (1.7320508075688772, 0.5, 0.055873439806562562618, -3.5073989922878436943),
    (1.7320508075688772, 1.0, 0.17311296807940710722, -1.3084196052814800151),
    (1.7320508075688772, 1.9, 0.40822988121272370199, -0.55651739892831729334),
    (1.7320508075688772, 2.0, 0.42883475120595494228, -0.50464493819016458884),
    (1.7320508075688772, 2.1, 0.44738839148067346552, -0.45408237446903348715),
    (1.7320508075688772, 5.0, -0.071074221095687029612, 0.35974903506251661625),
    (1.7320508075688772, 10.0, 0.23883640482333290136, 0.086598505113591382565),
    (1.7320508075688772, 17.5, 0.012371286600863681953, 0.19075862340775928318),
    (1.7320508075688772, 30.0, 0.023775041422145206899, 0.14383270538375659852),
    (1.7320508075688772, 50.0, -0.09299578669833059132, 0.063962359987251575656),
    (1.7320508075688772, 75.0, -0.067770962461932039486, 0.062429443332693551298),
    (1.7320508075688772, 100.0, -0.050734955211744118649, 0.06158764035705843634),
    (2.0, 0.001, 1.2499998958333366406e-7, -1273239.8630456674272),
    (2.0, 0.1, 0.001248958658799918984, -127.64478324269015877),
    (2.0, 0.5, 0.030604023458682641307, -5.4413708371742657196),
    (2.0, 1.0, 0.11490348493190048047, -1.6506826068162543911),
    (2.0, 1.9, 0.3299257276923872166, -0.66987867900128895142),
    (2.0, 2.0, 0.35283402861563771915, -0.61740810419068266648),
    (2.0, 2.1, 0.37462362515090366222, -0.56751146335225933478),
    (2.0, 5.0, 0.046565116277752215532, 0.36766288260552451799),
    (2.0, 10.0, 0.25463031368512062253, -0.0058680824422086146398),
    (2.0, 17.5, 0.084433830294313932929, 0.17167665521749300295),
    (2.0, 30.0, 0.078451246073265348901, 0.12292410306411384091),
    (2.0, 50.0, -0.059712800794258820511, 0.095793168727596488312),
    (2.0, 75.0, -0.036914313672959165576, 0.084430013376826796944),
    (2.0, 100.0, -0.021528757344505365585, 0.076836867125027956388),
    (2.5, 0.001, 1.6820882278642757419e-9, -75693988.276270561524),
    (2.5, 0.1, 0.00016808871900334129365, -758.20447152837420829),
    (2.5, 0.5, 0.0092364078193797244999, -14.138547422284622228),
    (2.5, 1.0, 0.049496810228477942271, -2.8763878574621614303),
    (2.5, 1.9, 0.20291809419040987278, -0.89650899232508977951),
    (2.5, 2.0, 0.22392453146891576584, -0.82822063244430374479),
    (2.5, 2.1, 0.24513299591767076872, -0.76783978983932838659),
    (2.5, 5.0, 0.24037720111131735285, 0.29437237496179247747),
    (2.5, 10.0, 0.19665848358181841265, -0.16417847961494106397),
    (2.5, 17.5, 0.17708420492285476396, 0.073343755855521927904),
    (2.5, 30.0, 0.14120285879928212036, 0.036788354967208243656),
    (2.5, 50.0, 0.023037219509625530445, 0.11053044455625437244),
    (2.5, 75.0, 0.032311052119657130998, 0.086306367267223226444),
    (2.5, 100.0, 0.038325919332375405594, 0.069994514522775029033),
    (5.0, 0.001, 2.6041665581597244309e-19, -244462007868026383.74),
    (5.0, 0.1, 2.6030817909644415564e-9, -24461484.502303908563),
    (5.0, 0.5, 8.053627241357474086e-6, -7946.3014788074733418),
    (5.0, 1.0, 0.00024975773021123443138, -260.40586662581222072),
    (5.0, 1.9, 0.0055384930136158799291, -12.499112807944682339),
    (5.0, 2.0, 0.0070396297558716854842, -9.935989128481974981),
    (5.0, 2.1, 0.0088284171173864664248, -8.0119734204972871507),
    (5.0, 5.0, 0.26114054612017009005, -0.45369482249110188076),
    (5.0, 10.0, -0.23406152818679364044, 0.1354030476893623032),
    (5.0, 17.5, -0.19267902605035410028, -0.028447785020283239259),
    (5.0, 30.0, -0.14324029551207707699, 0.031627359289264433312),
    (5.0, 50.0, -0.081400247696569639644, -0.078548413913081653386),
    (5.0, 75.0, -0.078523977013751366956, -0.048383671296970099413),
    (5.0, 100.0, -0.074195736964513920834, -0.029480196281661895696),
    (7.3, 0.001, 8.607318595771967233e-29, -5.0659324305880050632e+26),
    (7.3, 0.1, 3.4256033750586840514e-14, -1273009724315.4886762),
    (7.3, 0.5, 4.306032547721817354e-9, -10150580.173788356252),
    (7.3, 1.0, 6.6338472310364560484e-7, -66367.982041524406074),
    (7.3, 1.9, 0.000066414999137413221893, -680.5405996558626307),
    (7.3, 2.0, 0.000095437244742735858709, -475.5151312558371129),
    (7.3, 2.1, 0.00013457413824404393195, -338.68093023641027048),
    (7.3, 5.0, 0.039409129577419639677, -1.5677370361553105039),
    (7.3, 10.0, 0.26290961781484650634, 0.14718397821787969087),
    (7.3, 17.5, 0.17547436941160840312, 0.095853628544859341922),
    (7.3, 30.0, 0.14452793635451553398, -0.031391705228482528964),
    (7.3, 50.0, 0.094897252152234047355, 0.062161670270568317093),
    (7.3, 75.0, 0.089009781757298154349, 0.024613329147325955299),
    (7.3, 100.0, 0.079800650160950734863, 0.0038732411373650968057),
    (10.0, 0.001, 2.6911443943049993435e-40, -1.1828049377990414101e+38),
    (10.0, 0.1, 2.690532895434217073e-20, -1183133513204519131.8),
    (10.0, 0.5, 2.6131773608228030862e-13, -121963623349.56963053),
    (10.0, 1.0, 2.630615123687453207e-10, -121618014.27868918929),
    (10.0, 1.9, 1.5195615133800896192e-7, -213405.45508746719715),
    (10.0, 2.0, 2.5153862827167367096e-7, -129184.54220803928264),
    (10.0, 2.1, 4.0589914106619279791e-7, -80230.30490141215297),
    (10.0, 5.0, 0.0014678026473104741311, -25.129110095610096737),
    (10.0, 10.0, 0.2074861066333588577, -0.35981415218340272205),
    (10.0, 17.5, -0.14745649083318325869, -0.14985544115386287185),
    (10.0, 30.0, -0.12987689399858876819, 0.075056702122397113289),
    (10.0, 50.0, -0.11384784914946938567, 0.005723897182053513546),
    (10.0, 75.0, -0.080417867891894454548, 0.045798335061324988673),
    (10.0, 100.0, -0.054732176935472014742, 0.058331574236414928754),
    (13.7, 0.001, 1.5225103050191925399e-56, -1.5260519582180839434e+54),
    (13.7, 0.1, 3.8237226902541288333e-29, -6.0765182097830834541e+26),
    (13.7, 0.5, 1.4341763855667961541e-19, -162113050603783476.24),
    (13.7, 1.0, 1.8843877911752690069e-15, -12363049994945.81476),
    (13.7, 1.9, 1.187869887548731605e-11, -1975157856.6091997675),
    (13.7, 2.0, 2.3826650278047673457e-11, -985759572.79338330941),
    (13.7, 2.1, 4.6165147840039093773e-11, -509340170.22428875872),
    (13.7, 5.0, 4.6904132016914825647e-6, -5323.6299891226164831),
    (13.7, 10.0, 0.015749490573535791675, -2.2007306822207593623),
    (13.7, 17.5, 0.15534949399960061892, 0.18245875541865679334),
    (13.7, 30.0, -0.018685250907671180409, -0.15327062408659226449),
    (13.7, 50.0, -0.030075664666193611662, -0.11105596157634618066),
    (13.7, 75.0, -0.07966544016241778983, -0.047819457279877592054),
    (13.7, 100.0, -0.079816564985556986781, -0.0074846664495844588789),
    (20.0, 0.001, 3.9199043029592649358e-85, -4.0601742030076170278e+82),
    (20.0, 0.1, 3.9194377208586220087e-45, -4.0607084201263677101e+42),
    (20.0, 0.5, 3.7272019617047144607e-31, -4.2714301215659064361e+28),
    (20.0, 1.0, 3.8735030085246577189e-25, -4.1139703148355052801e+22),
    (20.0, 1.9, 1.4114480267847641943e-19, -113273664725844411.17),
    (20.0, 2.0, 3.9189728050907538391e-19, -40816513889983666.253),
    (20.0, 2.1, 1.0347456658482187751e-18, -15466786163851651.099),
    (20.0, 5.0, 2.7703300521289416874e-11, -593396529.69143206921),
    (20.0, 10.0, 0.000011513369247813397783, -1597.483848269625981),
    (20.0, 17.5, 0.050061941616810519173, -0.68169509014154611676),
    (20.0, 30.0, 0.0048310199934040645386, -0.16848153948742676694),
    (20.0, 50.0, -0.11670435275957973734, 0.01644263394811577765),
    (20.0, 75.0, 0.0068961047221521901732, 0.093591198265063702015),
    (20.0, 100.0, 0.062217458498338753141, 0.051247973076188424211),
];
