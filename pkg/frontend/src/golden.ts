// Generated by tools/embed-vectors.mjs from data/golden.json. Do not edit.
import type { GoldenVectors } from "./vectortypes.js";

export const GOLDEN: GoldenVectors = {"filters":[{"name":"one-pole-b0.1","period":0.016666666666666666,"stages":[{"alpha":6,"type":"one-pole"}],"steps":120,"target":{"u":[2],"v":1},"trace":[[0,1],[0.140731955875806,1.123235695812318],[0.29592521410309974,1.226490397787212],[0.45823740541284724,1.3063281712901225],[0.6203909320821641,1.3623130901355058],[0.7763113417163634,1.396410893739828],[0.92170085386727,1.4120443490609225],[1.0540772988268363,1.413179268794866],[1.1724755175140866,1.4036567229412777],[1.2770225079752138,1.386815968351649],[1.3685303938436313,1.3653517308054572],[1.4481739364750392,1.3413202908569106],[1.5172655345375214,1.3162204856252666],[1.5771140092619789,1.2911000814474318],[1.628945409351388,1.266660045969642],[1.673865373355211,1.2433444649785683],[1.7128471739058333,1.2214126684517674],[1.7467343858719566,1.2009944866469755],[1.7762510288179119,1.1821312703160902],[1.8020148360717942,1.1648056501926547],[1.824551164515326,1.1489627396466866],[1.844306230250927,1.1345250061411027],[1.8616590583550199,1.1214025446532307],[1.8769319374709283,1.1095000572525828],[1.8903993872527374,1.0987214984608025],[1.9022957536924676,1.0889730817924488],[1.9128215911910524,1.0801651460102926],[1.9221489994761451,1.0722132356789602],[1.9304260750469355,1.065038646656897],[1.9377806204534118,1.0585686127512068],[1.944323235769912,1.0527362568017897],[1.950149897917039,1.0474803919349711],[1.9553441163665433,1.0427452322230149],[1.959978738753224,1.038480053319162],[1.964117467099769,1.0346388305264433],[1.9678161345999072,1.0311798725770855],[1.971123783973372,1.0280654629940837],[1.9740835810473367,1.0252615164600674],[1.9767335911854462,1.022737254552694],[1.9791074412533298,1.0204649031114974],[1.9812348857840474,1.0184194120893257],[1.9831422927235303,1.0165781978078816],[1.984853061457513,1.014920906936971],[1.9863879836346254,1.0134292011488604],[1.9877655555127718,1.0120865611905658],[1.9890022490924415,1.0108781090171515],[1.9901127481001393,1.009790446602457],[1.99111015389835,1.0088115100649815],[1.9920061655854069,1.0079304377984315],[1.992811237877072,1.0071374513664935],[1.9935347198054627,1.0064237480013478],[1.9941849768090862,1.005781403629594],[1.994769498403067,1.0052032854338022],[1.9952949932973512,1.0046829730403644],[1.9957674735614743,1.0042146875031248],[1.9961923292082606,1.0037932273265346],[1.9965743943781238,1.0034139108413216],[1.9969180061443859,1.003072524309734],[1.9972270568232546,1.0027652751963587],[1.9975050405557093,1.0024887500944597],[1.9977550948292173,1.0022398768470246],[1.9979800375221606,1.002015890446487],[1.9981823999808275,1.001814302337771],[1.998364456575944,1.001632872786142],[1.9985282511314038,1.0014695860047176],[1.9986756205708254,1.0013226277666338],[1.998808216086723,1.0011903652541099],[1.9989275221015206,1.0010713289212292],[1.9990348732586167,1.000964196169443],[1.9991314696545655,1.0008677766547927],[1.9992183904996474,1.0007809990638779],[1.9992966063732092,1.0007028992118427],[1.99936699022175,1.000632609330278],[1.9994303272315224,1.0005693484261309],[1.9994873236930808,1.0005124136045702],[1.9995386149625376,1.0004611722594594],[1.999584772613063,1.0004150550447004],[1.9996263108601957,1.0003735495483852],[1.9996636923356819,1.0003361945994913],[1.999697333276693,1.0003025751438759],[1.9997276081902575,1.0002723176326473],[1.9997548540465033,1.0002450858716854],[1.9997793740487297,1.0002205772861954],[1.999801441023359,1.0001985195587995],[1.9998213004683705,1.0001786676038116],[1.9998391732948486,1.0001608008440808],[1.9998552582927227,1.0001447207601466],[1.999869734348592,1.0001302486844774],[1.9998827624406836,1.0001172238162817],[1.9998944874334352,1.000105501434837],[1.9999050396919085,1.0000949512914872],[1.9999145365341837,1.0000854561624362],[1.9999230835380488,1.0000769105462637],[1.9999307757166407,1.0000692194916891],[1.9999376985762158,1.000062297542558],[1.9999439290678966,1.0000560677883297],[1.9999495364440407,1.0000504610095169],[1.9999545830288121,1.00004541490858],[1.9999591249115625,1.0000408734177326],[1.9999632125707674,1.0000367860759671],[1.999966891435483,1.000033107468376],[1.999970202390586,1.0000297967215426],[1.999973182231435,1.0000268170493913],[1.9999758640730165,1.0000241353444543],[1.999978277718142,1.0000217218100107],[1.9999804499887939,1.000019549629011],[1.9999824050243118,1.0000175946661105],[1.9999841645497425,1.0000158351995],[1.9999857481173362,1.0000142516795503],[1.9999871733238828,1.0000128265115955],[1.9999884560063013,1.0000115438604362],[1.9999896104176647,1.0000103894743928],[1.999990649385613,1.0000093505269538],[1.9999915844549208,1.0000084154742586],[1.9999924260158026,1.0000075739268328],[1.9999931834193851,1.0000068165341496],[1.9999938650816285,1.0000061348807348],[1.9999944785768529,1.0000055213926613],[1.9999950307219112,1.0000049692533952],[1.9999955276519426,1.000004472328056],[1.9999959748885485,1.0000040250952504]],"y0":{"u":[0],"v":1}},{"name":"cascade-4","period":0.016666666666666666,"stages":[{"alpha":6,"type":"one-pole"},{"alpha":6,"type":"one-pole"},{"alpha":6,"type":"one-pole"},{"alpha":6,"type":"one-pole"}],"steps":120,"target":{"u":[2],"v":1},"trace":[[0,1],[0.00012466058506147706,1.000124645046737],[0.0005736960336945008,1.000573367095212],[0.0015854992941329495,1.001582989462308],[0.0034118921255185705,1.0034002906333845],[0.006301905029105666,1.0062624389547765],[0.010492499049545648,1.010383543790568],[0.016204268595437128,1.0159458444573513],[0.02364040715745284,1.0230942993997845],[0.03298752671440221,1.0319335620620502],[0.04441724412811506,1.0425265448324534],[0.05808774597874248,1.0548939784284455],[0.0741447974262679,1.0690145667235564],[0.092721866344418,1.0848255104810374],[0.11393919654589986,1.1022233224634082],[0.13790179343194742,1.1210649768109548],[0.16469639246366655,1.1411695243200224],[0.19438757391025874,1.162320359853427],[0.22701327106664626,1.184268346656666],[0.26257999383936753,1.2067359837653189],[0.3010581513357731,1.2294227475469257],[0.34237789861448675,1.2520116500134095],[0.3864259451509342,1.274176941878982],[0.4330437374667625,1.295592758691689],[0.4820273604252323,1.31594237892544],[0.5331293908915367,1.3349276513544437],[0.5860627906085859,1.3522780729869306],[0.6405067560377351,1.367758972752687],[0.6961142708476569,1.3811782881357308],[0.7525209534790522,1.3923915115846845],[0.8093546781001166,1.4013045212364406],[0.866245387266404,1.4078741788854876],[0.9228345154192958,1.412106755167408],[0.9787835013336124,1.4140544049591373],[1.0337809736200014,1.413810045876491],[1.0875483293941806,1.4115010768753558],[1.1398435728954834,1.4072824077347894],[1.1904634200185158,1.4013292566826867],[1.2392437922022712,1.3938301216047375],[1.2860589101361581,1.3849802525421486],[1.3308192511821195,1.3749758627144342],[1.3734686559923792,1.3640092239392103],[1.4139808646299703,1.352264709189818],[1.4523557374720848,1.3399157760008973],[1.4886153785636593,1.327122832231852],[1.522800335486002,1.3140318904865758],[1.5549660055205246,1.300773897615029],[1.5851793367115883,1.287464618498616],[1.6135158766943671,1.2742049556660588],[1.640057192949115,1.2610815952007626],[1.6648886656364557,1.2481678822611058],[1.6880976378973198,1.2355248442342746],[1.709771897643166,1.2232022945187842],[1.7299984584400607,1.2112399641174056],[1.7488626041174538,1.1996686209759864],[1.7664471613033215,1.1885111480041237],[1.7828319654244111,1.1777835598741193],[1.7980934881812376,1.167495946084056],[1.8123045976217185,1.1576533335513781],[1.8255344253313506,1.1482564663840726],[1.8378483186752326,1.139302503680689],[1.849307859297582,1.1307856384546806],[1.8599709321034812,1.1226976422604045],[1.8698918316600974,1.115028340990058],[1.8791213953399808,1.1077660277583377],[1.8877071545901047,1.100897818913972],[1.8956934974647852,1.0944099591100682],[1.903121837034782,1.0882880811030322],[1.9100307815091202,1.0825174255899528],[1.916456302911871,1.0770830259794757],[1.9224319019738123,1.0719698625525693],[1.9279887675569092,1.067162990029268],[1.9331559294535876,1.0626476421305464],[1.9379604038154656,1.0584093163206412],[1.9424273307872542,1.0544338415401935],[1.9465801041677864,1.05070743139739],[1.950440493105842,1.0472167249737383],[1.9540287559755376,1.0439488171226434],[1.9573637466744782,1.0408912798911343],[1.96046301365578,1.0380321764758813],[1.963342892049139,1.0353600689317697],[1.9660185892517967,1.0328640206822803],[1.9685042643818813,1.0305335947333831],[1.9708131019877193,1.0283588483642176],[1.9729573804000988,1.0263303249563345],[1.9749485351023255,1.0244390435266648],[1.9767972174769843,1.0226764864458453],[1.9785133492699463,1.021034585751389],[1.9801061730923575,1.0195057084029753],[1.9815842992609274,1.018082640773544],[1.9829557492563514,1.016758572623749],[1.9842279960595985,1.01552708076767],[1.9854080016063775,1.0143821126035908],[1.986502251581555,1.0133179696544028],[1.9875167877577762,1.0123292912370767],[1.9884572380661163,1.0114110383591353],[1.989328844571274,1.010558477921623],[1.9901364895096383,1.009767167292307],[1.9908847195354658,1.0090329392993678],[1.991577768308366,1.008351887684354],[1.9922195775442628,1.007720353043385],[1.9928138166419014,1.0071349092772728],[1.9933639009877673,1.0065923505642016],[1.9938730090338799,1.0060896788626452],[1.994344098235285,1.0056240919472133],[1.9947799199271143,1.00519297197593],[1.9951830332147578,1.004793874583973],[1.9955558179449377,1.0044245184960316],[1.995900486820255,1.004082775647097],[1.996219096715007,1.003766661799611],[1.996513559245752,1.0034743276433946],[1.9967856506461412,1.0032040503636077],[1.9970370209919461,1.002954225661124],[1.997269202818905,1.0027233602090584],[1.9974836191730174,1.0025100645287797],[1.9976815911301515,1.0023130462684842],[1.9978643448192985,1.002131103867329],[1.9980330179814887,1.001963120588159],[1.9981886660942405,1.0018080589020038],[1.998332268089441,1.0016649552077743],[1.9984647316907316,1.001532914870877]],"y0":{"u":[0],"v":1}},{"name":"clipped-cascade","period":0.016666666666666666,"stages":[{"alpha":6,"c":1,"type":"clipped-one-pole"},{"alpha":6,"type":"one-pole"},{"alpha":6,"type":"one-pole"},{"alpha":6,"type":"one-pole"}],"steps":120,"target":{"u":[30],"v":1},"trace":[[0,1],[0.0000011086686121782366,1.0000166298902915],[0.000005211063109551315,1.0000781628783482],[0.000014703943460587224,1.0002205347260233],[0.00003228843464846768,1.0004842087693897],[0.000060811094979854545,1.0009117489326451],[0.00010314541810027202,1.0015459809235077],[0.00016210663601284354,1.0024286372614382],[0.00024039348998624143,1.003599395630825],[0.00034055142349477324,1.005095232666821],[0.0004649524226231028,1.0069500268126206],[0.0006157874687526532,1.0091943543581547],[0.0007950682581923118,1.0118554321701465],[0.0010046354695875401,1.0149571689461576],[0.001246171413688971,1.0185202940872],[0.0015212153780460062,1.0225625395276094],[0.0018311803826050047,1.0270988551529774],[0.002177370395550582,1.032141642859486],[0.0025609973286748505,1.0377009979531329],[0.0029831973458379632,1.0437849495507845],[0.0034450461847511916,1.0503996940209568],[0.003947573319181824,1.0575498173799398],[0.004491774882955775,1.0652385040201438],[0.0050786253452284056,1.073467730265542],[0.005709087973941284,1.0822384420878532],[0.006384124155844545,1.0915507169316956],[0.007104701660787448,1.1014039100338868],[0.007871801948277253,1.1117967859201627],[0.008686426618055625,1.1227276359537413],[0.009549603105581565,1.1341943829203052],[0.010462389719332357,1.146194673683895],[0.011425880110868931,1.1587259609544263],[0.01244120726149867,1.1717855751829491],[0.013509547061717288,1.1853707875553983],[0.014632121551855157,1.1994788649970225],[0.015810201884789286,1.2141071180336764],[0.017045111064404872,1.2292529422868779],[0.018338226506818114,1.2449138543100589],[0.0196909824652688,1.261087522405806],[0.02110487235408011,1.2777717929995631],[0.022581451002160954,1.2949647130850563],[0.024122336862171294,1.3126645492011442],[0.025729214197649296,1.330869803349015],[0.027403835267071488,1.3495792262126725],[0.029148022520939336,1.3687918280042786],[0.030963670825514555,1.3885068872189443],[0.03285274972471722,1.408723957550605],[0.0348173057499152,1.4294428731914302],[0.03685946478583112,1.4506637527113695],[0.03898143449953967,1.4723870016916565],[0.04118550683849058,1.4946133142659912],[0.043474060602641945,1.5173436737054573],[0.045849564095099576,1.5405793521676427],[0.04831457785510576,1.5643219097167476],[0.050871757476786704,1.588573192709364],[0.05352385651673205,1.6133353316299546],[0.056273729493227446,1.6386107384506376],[0.05912433497977816,1.664402103581505],[0.06207873879543521,1.6907123924702923],[0.06514011729435666,1.7175448419035735],[0.06831176075699445,1.7449029560557527],[0.07159707688528548,1.7727905023267807],[0.07499959440423652,1.80121150700474],[0.07852296677232168,1.8301702507851323],[0.08217097600315133,1.8596712641747248],[0.08594753660092189,1.8897193228042835],[0.08985669961220943,1.9203194426712122],[0.09390265679672688,1.9514768753301464],[0.09808974491971982,1.9831971030467868],[0.10242245016872933,2.015485833927716],[0.10690541269749837,2.048348997036618],[0.11154343129984086,2.0817927375051224],[0.1163414682163278,2.115823411644528],[0.1213046540766713,2.1504475820627356],[0.12643829298070508,2.1856720127890337],[0.13174786772086672,2.2215036644077353],[0.1372390451490835,2.257949689200152],[0.1429176816909475,2.2950174262929903],[0.14878982901003793,2.332714396809924],[0.154861739825207,2.3710482990218704],[0.161139873883591,2.410027003490313],[0.16763090409203768,2.4496585481969526],[0.17434172280955762,2.4899511336519256],[0.18127944830330364,2.5309131179718403],[0.18845143137046705,2.572553011918008],[0.19586526212834127,2.6148794738843346],[0.2035287769746497,2.657901304823539],[0.21145006572005934,2.701627443099573],[0.21963747889460647,2.746066959253359],[0.2280996352295415,2.7912290506682482],[0.23684542931585945,2.8371230361209125],[0.2458840394405149,2.8837583502027067],[0.25522493560102727,2.9311445375958924],[0.2648778876988607,2.979291247188496],[0.27485297391161206,3.028208226010931],[0.28516058924365617,3.0779053129769696],[0.2958114542544829,3.128392432410981],[0.3068166239635076,3.1796795873428545],[0.3181874969296457,3.231776852551391],[0.3299358245034154,3.2846943673364293],[0.3420737202487577,3.3384423279993705],[0.354613669531148,3.393030980011241],[0.36756853926791017,3.4484706098468796],[0.38095158783592953,3.504771536463271],[0.39477647513119596,3.5619441023995337],[0.4090572727737868,3.6199986644755042],[0.42380847445101993,3.6789455840653664],[0.439045006390567,3.7387952169222207],[0.4547822379543103,3.799557902528994],[0.4710359923426576,3.8612439529505824],[0.4878225573978824,3.9238636411616303],[0.5051586964938439,3.9874271888238795],[0.523061659498146,4.051944753486574],[0.5415491937914192,4.117426415182959],[0.5606395553269568,4.183882162395523],[0.5803515197123852,4.251321877362267],[0.6007043932934218,4.319755320695905],[0.6217180242180416,4.389192115287688],[0.6434128134575514,4.459641729467192],[0.6658097257591521,4.531113459389318],[0.6889303005025388,4.603616410619546]],"y0":{"u":[0],"v":1}},{"name":"two-pole","period":0.016666666666666666,"stages":[{"omega0":6,"type":"two-pole","zeta":1}],"steps":120,"target":{"u":[2],"v":1},"trace":[[0,1],[0.01262050600710126,1.0124632017225748],[0.03599884383514178,1.0347472014520342],[0.06901745380281328,1.0645522526753692],[0.11093802446600341,1.099803984198815],[0.16116743654941101,1.1385780300422599],[0.21910522135219607,1.179068846454946],[0.28404831854259904,1.219595502541035],[0.3551416774702225,1.2586332841078378],[0.43136806286491114,1.2948581853121974],[0.5115706909171853,1.327191323822185],[0.5945005257632627,1.3548321580157927],[0.6788781572037476,1.3772729439291034],[0.7634594837532238,1.3942914272754132],[0.8470954841674954,1.4059232585877608],[0.9287789511398955,1.4124190462462856],[1.0076744446213726,1.4141927389503008],[1.0831310277502757,1.4117681226834609],[1.1546799029011952,1.4057290377730969],[1.2220205581195538,1.3966770821389896],[1.2849995003853434,1.3851986445200213],[1.34358534710167,1.3718415029649105],[1.3978432990844278,1.357100110299022],[1.4479111188059308,1.3414080772270676],[1.4939778894730233,1.3251361608196257],[1.536266141799236,1.3085941407326265],[1.5750174397073577,1.2920351945796194],[1.6104812006669593,1.275661672871074],[1.6429063556745573,1.2596314611160115],[1.6725353873606525,1.2440643684101138],[1.6996002856864112,1.2290481846809302],[1.7243200003554884,1.2146442018488472],[1.7468990269464058,1.2008921032076572],[1.7675268265945352,1.1878141986260815],[1.7863778390336513,1.1754190292303264],[1.8036119019851935,1.1637043915822172],[1.8193749347636243,1.1526598441349056],[1.8337997805118054,1.1422687626029453],[1.8470071304249003,1.1325100092314306],[1.8591064757306035,1.123359276170247],[1.8701970502050007,1.1147901568521832],[1.8803687386862327,1.1067749924641466],[1.8897029363384088,1.0992855339131926],[1.8982733500988416,1.0922934534740212],[1.9061467384468571,1.0857707347327625],[1.9133835888637605,1.0796899645705507],[1.9200387345003531,1.0740245467488112],[1.9261619129283125,1.0687488531179667],[1.9317982706493342,1.0638383255057653],[1.9369888174386252,1.0592695388780737],[1.9417708347306555,1.055020234332368],[1.9461782422051008,1.0510693288159758],[1.9502419265646231,1.047396907098142],[1.953990036259795,1.0439842004154254],[1.9574482456424982,1.0408135553095483],[1.9606399917398516,1.0378683954481214],[1.9635866865511047,1.0351331786303943],[1.9663079074896839,1.0325933507063219],[1.9688215683276487,1.0302352977563698],[1.9711440727535328,1.028046297574035],[1.9732904524284278,1.0260144712486596],[1.9752744912195155,1.024128735451025],[1.9771088371045682,1.022378755868958],[1.978805103074218,1.020754902116992],[1.980373958209771,1.0192482043467659],[1.9818252099815872,1.0178503117082653],[1.9831678786951017,1.0165534527520796],[1.9844102649069881,1.0153503978163176],[1.9855600105413873,1.0142344234059801],[1.9866241543542642,1.0131992785453086],[1.9876091823216149,1.012239153063164],[1.9885210734633596,1.0113486477564735],[1.9893653415583392,1.0105227463660336],[1.990147073156013,1.00975678929165],[1.9908709622464513,1.0090464489689224],[1.9915413419113357,1.0083877068274227],[1.9921622132443009,1.0077768317490592],[1.99273727179855,1.0072103599457132],[1.9932699317927456,1.0066850761764756],[1.9937633482823236,1.0061979962267404],[1.9942204374822226,1.0057463505738713],[1.9946438954082255,1.005327569166962],[1.9950362149874197,1.004939267251266],[1.9953997017734135,1.0045792321710625],[1.9957364883887165,1.0042454110880017],[1.9960485478048722,1.0039358995552492],[1.9963377055603875,1.0036489308910088],[1.9966056510070684,1.003382866298194],[1.996853947666923,1.0031361856801269],[1.9970840427742143,1.0029074791051422],[1.9972972760704488,1.002695438875866],[1.9974948879139647,1.0024988521616918],[1.9976780267602836,1.0023165941556136],[1.9978477560644226,1.0021476217190755],[1.9980050606518858,1.0019909674808594],[1.9981508526010072,1.0018457343582818],[1.9982859766756518,1.001711090471071],[1.9984112153439626,1.0015862644202915],[1.998527293415835,1.001470540906546],[1.998634882329063,1.0013632566634454],[1.998734604111618,1.0012637966839768],[1.998827035045262,1.0011715907189405],[1.9989127090536303,1.0010861100280735],[1.9989921208360517,1.0010068643658194],[1.999065728766648,1.0009333991849654],[1.9991339575766942,1.0008652930425428],[1.9991972008367884,1.0008021551934874],[1.9992558232540665,1.0007436233585703],[1.9993101627985004,1.0006893616540733],[1.9993605326712132,1.0006390586715628],[1.9994072231267381,1.000592425696949],[1.9994505031602234,1.0005491950587828],[1.9994906220697277,1.0005091185964627],[1.999527810902977,1.0004719662396866],[1.9995622837972287,1.0004375246911077],[1.9995942392202282,1.000405596204727],[1.9996238611196377,1.000375997453092],[1.999651319987751,1.000348558476868],[1.9996767738477939,1.0003231217108137],[1.999700369167635,1.000299541080618],[1.9997222417062899,1.0002776811654606]],"y0":{"u":[0],"v":1}},{"name":"clipped-two-pole","period":0.016666666666666666,"stages":[{"alpha":6,"c":1,"type":"clipped-one-pole"},{"omega0":6,"type":"two-pole","zeta":1}],"steps":120,"target":{"u":[30],"v":1},"trace":[[0,1],[0.000011088345615739249,1.0001663112930377],[0.00004204433523888574,1.0006304654014095],[0.00009975119749980842,1.001495145257676],[0.00018955668316377686,1.0028393014651837],[0.00031558055193860266,1.0047225074452517],[0.00048097211340707017,1.0071886278488449],[0.0006881229318199076,1.0102688822493884],[0.0009388405357966163,1.0139843858030297],[0.001234488976748947,1.0183482436472482],[0.001576101681024309,1.0233672685474267],[0.0019644714500437785,1.0290433831249468],[0.002400221808779515,1.0353747597844247],[0.002883863260361613,1.042356743703203],[0.003415837412994339,1.0499825972103531],[0.003996551422402312,1.0582440976678291],[0.004626404743356503,1.0671320155818802],[0.005305809804741156,1.076636495073686],[0.006035207907679831,1.0867473549523394],[0.006815081387482587,1.0974543253776712],[0.0076459628694099425,1.1087472323907275],[0.008528442277737202,1.1206161403462074],[0.009463172120407221,1.133051460431359],[0.010450871461659702,1.1460440319357204],[0.011492328907313477,1.1595851816902845],[0.01258840485759278,1.1736667660758415],[0.013740033227015997,1.1882811991685298],[0.014948222787036098,1.2034214699125954],[0.01621405825250888,1.2190811506582526],[0.017538701205791145,1.2352543989534084],[0.018923390930829277,1.251935954112891],[0.02036944521278268,1.269121129792267],[0.021878261145574274,1.2868058035525296],[0.02345131597950428,1.304986404206555],[0.02509016803309523,1.323659897579784],[0.026796457687170885,1.3428237711891098],[0.028571908474426484,1.3624760182399243],[0.030418328274118063,1.3826151212570126],[0.032337610618744336,1.4032400355968304],[0.034331736117525234,1.4243501730336212],[0.03640277399994669,1.4459453855673465],[0.038552883781522745,1.4680259495655392],[0.040784317053130334,1.4905925503223243],[0.04309941939472487,1.513646267094652],[0.04550063241388895,1.5371885586571985],[0.047990495909455595,1.5612212494025384],[0.050571650160346704,1.5857465160013595],[0.05324683833974792,1.6107668746281223],[0.056018909054782184,1.6362851687501692],[0.05889081901192781,1.662304557472526],[0.061865635808540834,1.6888285044261364],[0.06494654085097466,1.7158607671838422],[0.06813683239993547,1.743405387185825],[0.07143992874386312,1.7714666801543162],[0.07485937150128016,1.8000492269759811],[0.07839882905320218,1.8291578650294626],[0.082062100106849,1.8587976799349395],[0.08585311739203592,1.8889739977022284],[0.08977595149175627,1.919692377253821],[0.09383481480858905,1.9509586032992854],[0.09803406566867932,1.9827786795375921],[0.10237821256514154,2.015158822164199],[0.10687191854282858,2.0481054536599963],[0.11152000572649072,2.0816251968395925],[0.11632745999441871,2.115724869136768],[0.12129943579972369,2.150411477105339],[0.12644126114145335,2.185692211114032],[0.1317584426877782,2.221574440214377],[0.13725667105350414,2.25806570716098],[0.14294182623417642,2.2951737235638854],[0.1488199831990365,2.3329063651530713],[0.15489741764507525,2.371271667135406],[0.16118061191439428,2.410277819624683],[0.16767626107703987,2.449933163125559],[0.17439127918141206,2.490246184052456],[0.181332805674272,2.5312255102646306],[0.18850821199227535,2.572879906598774],[0.1959251083268443,2.615218270380586],[0.2035913505640589,2.658249626896851],[0.21151504740109336,2.70198312480957],[0.21970456764054924,2.746428031493695],[0.22816854766383857,2.7915937282799783],[0.2369158990845497,2.837489705584397],[0.2459558165824801,2.8841255579054845],[0.2552977859187467,2.9315109786707874],[0.2649515921320813,2.9796557549134906],[0.2749273279160856,3.028569761760071],[0.28523540217685345,3.0782629567096076],[0.29588654876997,3.1287453736851223],[0.30689183541545945,3.1800271168370675],[0.3182626727887802,3.232118354078747],[0.33001082378545016,3.2850293103331536],[0.342148412956328,3.338770260470352],[0.35468793610997157,3.39335152191416],[0.3676422700778455,3.4487834468965026],[0.38102468263744677,3.505076414337408],[0.39484884258766284,3.562240821328201],[0.40912882996986716,3.6202870741950073],[0.42387914642738567,3.6792255791192665],[0.4391147256950377,3.7390667322914752],[0.4548509442094583,3.7998209095739566],[0.47110363182984466,3.8614984556480154],[0.4878890826576333,3.9241096726203293],[0.505224065942407,3.987664808063082],[0.5231258370600413,4.052174042461826],[0.5416121485477342,4.117647476044723],[0.5607012611791089,4.184095114966361],[0.5804119550610438,4.2515268568190265],[0.6007635407322506,4.319952475443949],[0.6217758702419007,4.389381605014751],[0.6434693481847827,4.459823723365091],[0.6658649426675498,4.53128813453225],[0.6889841961786016,4.603783950488348],[0.712849236332016,4.6773200720306995],[0.7374827864537161,4.7519051688029155],[0.762908175975716,4.827547658418382],[0.789149350601841,4.904255684657953],[0.8162308822057521,4.982037094713978],[0.8441779784194339,5.060899415453205],[0.8730164918675147,5.140849828671586],[0.9027729289998939,5.221895145314741]],"y0":{"u":[0],"v":1}},{"name":"cascade-4-2d","period":0.016666666666666666,"stages":[{"alpha":6,"type":"one-pole"},{"alpha":6,"type":"one-pole"},{"alpha":6,"type":"one-pole"},{"alpha":6,"type":"one-pole"}],"steps":120,"target":{"u":[3,-2],"v":0.5},"trace":[[0,0,1],[0.00014138591823518063,-0.00009425727882345373,1.0002886068322387],[0.000651051296856133,-0.00043403419790408854,1.001328041756889],[0.0018016752628626322,-0.0012011168419084211,1.0036693439282023],[0.0038863821902437095,-0.0025909214601624727,1.007892641655327],[0.0072054676501720274,-0.004803645100114684,1.0145675593413663],[0.012062469720316472,-0.008041646480210982,1.024228936047711],[0.018766859645691414,-0.012511239763794275,1.0373633005904206],[0.027640942527664657,-0.018427295018443104,1.0544020082883232],[0.039029016107941523,-0.026019344071961017,1.0757175335916358],[0.05330727107595612,-0.03553818071730408,1.1016200476821516],[0.07089322615929738,-0.04726215077286492,1.132352027009643],[0.09225363054020125,-0.06150242036013417,1.1680792116324215],[0.11790973369906893,-0.07860648913271263,1.2088767763933215],[0.1484386484995982,-0.09895909899973217,1.2547101441090422],[0.1844692734728885,-0.12297951564859237,1.3054105328297494],[0.22667098098694707,-0.15111398732463144,1.360646170603009],[0.27573314294486184,-0.18382209529657462,1.419891194723752],[0.33233372009421475,-0.22155581339614322,1.4823955872472403],[0.3970957812968186,-0.2647305208645458,1.5471609910072055],[0.4705321339282458,-0.31368808928549724,1.6129286532438485],[0.5529803394222338,-0.3686535596148226,1.6781866254492015],[0.6445331634596144,-0.42968877563974306,1.7412031208573526],[0.7449725560862448,-0.4966483707241633,1.8000909858173446],[0.8537177902391673,-0.5691451934927783,1.8529042051591567],[0.9697993571569136,-0.6465329047712758,1.8977614316952793],[1.0918686266037627,-0.7279124177358419,1.9329847316976938],[1.2182486752180708,-0.8121657834787139,1.9572358900456903],[1.3470246098719807,-0.8980164065813205,1.9696298444683964],[1.4761638105077333,-0.9841092070051556,1.9698066824289007],[1.6036500926314252,-1.0691000617542836,1.9579502845080605],[1.727612908518575,-1.1517419390123835,1.9347515397825206],[1.8464342818988881,-1.2309561879325923,1.9013242640607428],[1.9588215601274248,-1.30588104008495,1.859089609256888],[2.0638414076188996,-1.3758942717459333,1.8096480352870299],[2.160917531154546,-1.4406116874363644,1.7546566544821307],[2.2497997160482783,-1.499866477365519,1.6957252022683507],[2.330514146619691,-1.553676097746461,1.6343379376352665],[2.403304915897382,-1.6022032772649213,1.5718031724082595],[2.468574895815698,-1.6457165972104655,1.5092279560519097],[2.5268316647969407,-1.6845544431979607,1.447513050120461],[2.5786417179965855,-1.7190944786643907,1.3873625140721575],[2.6245941588784,-1.749729439252267,1.3293025261449956],[2.665273652485121,-1.7768491016567478,1.2737049795607343],[2.7012415840724735,-1.8008277227149827,1.2208125241854593],[2.73302399010328,-1.8220159934021871,1.17076280641938],[2.7611047663795,-1.8407365109196667,1.1236105623509678],[2.7859227810235874,-1.8572818540157252,1.0793468991774737],[2.807871730945254,-1.8719144872968365,1.0379155695430367],[2.8273018152546867,-1.8848678768364582,0.9992263397003108],[2.844522520783099,-1.8963483471887328,0.9631657185569442],[2.859806005667189,-1.9065373371114593,0.9296053904520528],[2.8733907212753853,-1.9155938141835902,0.8984087120150702],[2.8854850319046292,-1.9236566879364194,0.8694356164906039],[2.8962706802349834,-1.9308471201566555,0.8425462339560083],[2.9059060101496033,-1.9372706734330687,0.8176034936386619],[2.9145289027351593,-1.943019268490106,0.7944749315739691],[2.9222594109060442,-1.9481729406040291,0.7730338867533497],[2.929202097099383,-1.9528013980662549,0.753160233426375],[2.935448089958164,-1.9569653933054423,0.7347407669114858],[2.941076882191486,-1.9607179214609904,0.7176693350346449],[2.946157894589374,-1.9641052630595826,0.701846786706543],[2.950751831705525,-1.9671678878036831,0.6871807925706643],[2.9549118538681522,-1.9699412359121014,0.673585579480592],[2.958684588529286,-1.972456392352857,0.660981610203259],[2.9621110019130783,-1.974740667942052,0.6492952316676499],[2.965227149731728,-1.9768180998211518,0.638458308833004],[2.9680648235648146,-1.9787098823765428,0.6284078564586068],[2.9706521074394048,-1.9804347382929361,0.6190856774087482],[2.9730138572553453,-1.98200923817023,0.6104380133709058],[2.975172113995019,-1.983448075996679,0.6024152118025758],[2.9771464601435857,-1.9847643067623904,0.5949714113939982],[2.9789543274174903,-1.98596955161166,0.5880642472157342],[2.9806112627427717,-1.9870741751618477,0.5816545759143652],[2.9821311584244574,-1.9880874389496381,0.5757062207508324],[2.9835264515871054,-1.9890176343914034,0.5701857358856215],[2.9848082972276835,-1.9898721981517888,0.5650621890580296],[2.9859867185897437,-1.9906578123931622,0.5603069616485638],[2.9870707380278914,-1.991380492018594,0.5558935650276774],[2.988068491071024,-1.9920456607140158,0.5517974720604855],[2.98898732600035,-1.9926582173335665,0.5479959626405897],[2.9898338909239106,-1.9932225939492734,0.5444679821552613],[2.9906142100446074,-1.9937428066964045,0.5411940118304097],[2.991333750576227,-1.994222500384151,0.538155949960675],[2.9919974815553037,-1.9946649877035356,0.5353370030929416],[2.9926099256204917,-1.9950732837469942,0.5327215862972355],[2.9931752046808184,-1.9954501364538788,0.5302952317248826],[2.99369708026588,-1.9957980535105868,0.5280445047183445],[2.994178989241378,-1.9961193261609187,0.5259569267991326],[2.994624075479603,-1.9964160503197355,0.5240209049189367],[2.9950352179941784,-1.9966901453294523,0.5222256664141585],[2.9954150559795196,-1.9969433706530133,0.5205611991552003],[2.9957660111364226,-1.9971773407576154,0.5190181964290854],[2.9960903076144443,-1.9973935384096297,0.5175880061373387],[2.9963899898581148,-1.9975933265720767,0.5162625839306597],[2.9966669386064577,-1.9977779590709719,0.5150344499379889],[2.996922885262915,-1.9979485901752767,0.5138966487802775],[2.9971594248248468,-1.9981062832165646,0.5128427125888971],[2.9973780275376427,-1.9982520183584285,0.5118666267753668],[2.9975800494176226,-1.9983866996117483,0.5109627983231928],[2.997766741769842,-1.9985111611798947,0.510126026394332],[2.9979392598112735,-1.9986261732075157,0.5093514750623093],[2.998098670496253,-1.9987324469975019,0.5086346480015694],[2.998245959629304,-1.998830639752869,0.5079713649783983],[2.998382038340201,-1.9989213588934673,0.5073577400028938],[2.9985077489872256,-1.9990051659914836,0.5067901610141634],[2.998623870546792,-1.9990825803645278,0.5062652709823311],[2.9987311235408733,-1.9991540823605822,0.5057799503211614],[2.9988301745477313,-1.9992201163651542,0.5053313005143187],[2.9989216403362935,-1.999281093557529,0.5049166288665404],[2.999006091660021,-1.999337394440014,0.5045334342984508],[2.999084056742138,-1.9993893711614252,0.5041793941104413],[2.9991560244806403,-1.9994373496537603,0.5038523516470964],[2.999222447398449,-1.999481631598966,0.5035503047990957],[2.999283744361405,-1.9995224962409368,0.5032713952844728],[2.9993403030844497,-1.9995602020563,0.5030138986555812],[2.9993924824442475,-1.9995949882961652,0.5027762149821766],[2.9994406146146964,-1.9996270764097976,0.5025568601647258],[2.999485007040129,-1.9996566713600858,0.5023544578354073],[2.9995259442595934,-1.999683962839729,0.5021677318073434],[2.99956368959432,-1.9997091263962132,0.50199549903541]],"y0":{"u":[0,0],"v":1}}],"geometry":{"dist":[{"out":1.762747174039086,"x":{"u":[0],"v":1},"y":{"u":[2],"v":1}},{"out":1,"x":{"u":[0],"v":1},"y":{"u":[0],"v":2.718281828459045}},{"out":3.275717687387299,"x":{"u":[1,-2],"v":0.5},"y":{"u":[-3,0.5],"v":2}},{"out":3.1516117026390607,"x":{"u":[1.2509546660466695],"v":6.229132974474143},"y":{"u":[2.7568569024519354],"v":0.2821073361044684}},{"out":0.6320663100082082,"x":{"u":[-1.9983371508877457],"v":5.586076652115128},"y":{"u":[-4.947346954344253],"v":4.389922333427538}},{"out":4.3979731376565745,"x":{"u":[2.9706942875204625],"v":0.8627200784746587},"y":{"u":[-1.9696757318068645],"v":0.3604551411348231}},{"out":2.129498755803241,"x":{"u":[-2.451304123458754],"v":0.7765199390209717},"y":{"u":[0.04548258957953344],"v":1.279365703288183}},{"out":1.0688285566552942,"x":{"u":[4.955002834343926],"v":3.8487866582892636},"y":{"u":[1.2217922944116264],"v":9.504303482968096}},{"out":6.427413373280766,"x":{"u":[-2.8469130176440105],"v":0.20913372245936446},"y":{"u":[1.1253960427303076],"v":0.12242891930028223}},{"out":2.192298419536585,"x":{"u":[-4.643197212264038],"v":1.0709708260924298},"y":{"u":[-0.337939746747109],"v":6.828660891778605}},{"out":2.179731293359528,"x":{"u":[1.2922625449101046],"v":1.0671741410297693},"y":{"u":[-0.03126564606495741],"v":0.3126294193913177}},{"out":6.632480253090334,"x":{"u":[-4.882059744574941],"v":0.24255168051306178},"y":{"u":[1.9203212088183914],"v":0.2518914625088582}},{"out":6.933428819120444,"x":{"u":[-1.304636893977933],"v":0.10173455367383723},"y":{"u":[3.300477298017455],"v":0.20366770147605215}},{"out":2.744238135685875,"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118},"y":{"u":[3.471502463658693,1.397171669425262],"v":3.0446816846262377}},{"out":3.7250168516645195,"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835},"y":{"u":[3.7133937669288066,-1.387359409858424],"v":1.5716945036828642}},{"out":4.352167166257519,"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987},"y":{"u":[-3.4980027092954815,3.1633810381907566],"v":0.5739741625910711}},{"out":3.8339850392496295,"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732},"y":{"u":[1.3799658078833223,1.7645024381278827],"v":0.20025162009273215}},{"out":5.940810528850286,"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011},"y":{"u":[-4.032959060682543,4.678280510488214],"v":0.26915848473207005}},{"out":0.34762037419905206,"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037},"y":{"u":[1.6221473833845383,-3.6838418419169425],"v":4.899464798923215}},{"out":2.828313043658619,"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082},"y":{"u":[-3.545400462390731,-3.0753650503166763],"v":7.174825937720761}},{"out":2.7213614304077987,"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992},"y":{"u":[1.4157170522248075,0.6969427447380792],"v":0.5656863147140637}},{"out":5.255070151781543,"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984},"y":{"u":[3.7621880810927095,-0.3226978318590392],"v":1.2452897069876583}},{"out":7.8796997366644845,"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739},"y":{"u":[-1.2781472743479605,-4.696497056158884],"v":0.17611007596489023}}],"exp_map":[{"out":{"u":[1.9999999999999998],"v":0.9999999999999999},"vec":{"du":[1.2464504802804612],"dv":1.246450480280461},"x":{"u":[0],"v":1}},{"out":{"u":[1.3822150551134773],"v":0.15184802444772835},"vec":{"du":[2.8028894123842063],"dv":0.9465643802310866},"x":{"u":[0],"v":1}},{"out":{"u":[0],"v":2.718281828459045},"vec":{"du":[0],"dv":1},"x":{"u":[0],"v":1}},{"out":{"u":[-0.46548387667061675],"v":1.0446189658543414},"vec":{"du":[-0.43067852166311216],"dv":0.1424406474628821},"x":{"u":[0],"v":1}},{"out":{"u":[-2.999999999999999,0.49999999999999956],"v":1.9999999999999993},"vec":{"du":[-0.24793108968884314,0.15495693105552696],"dv":1.6115520829774799},"x":{"u":[1,-2],"v":0.5}},{"out":{"u":[1.57573979211,-2.2405898677824085],"v":0.008895045915770275},"vec":{"du":[2.236855251388646,-0.934735998023843],"dv":0.541745893738288},"x":{"u":[1,-2],"v":0.5}},{"out":{"u":[2.7568569024519363],"v":0.2821073361044687},"vec":{"du":[8.983401032874102],"dv":-17.45584160496872},"x":{"u":[1.2509546660466695],"v":6.229132974474143}},{"out":{"u":[2.2042426054240503],"v":5.342748248714861},"vec":{"du":[1.102106240037262],"dv":-0.8675173378589278},"x":{"u":[1.2509546660466695],"v":6.229132974474143}},{"out":{"u":[-4.947346954344252],"v":4.3899223334275375},"vec":{"du":[-3.5138606585624412],"dv":-0.3451465142819098},"x":{"u":[-1.9983371508877457],"v":5.586076652115128}},{"out":{"u":[-1.8439327223898136],"v":7.4255177755426445},"vec":{"du":[0.11459091897594043],"dv":1.5914842996711354},"x":{"u":[-1.9983371508877457],"v":5.586076652115128}},{"out":{"u":[-1.9696757318068618],"v":0.3604551411348227},"vec":{"du":[-1.279708325178525],"dv":3.5718972501170327},"x":{"u":[2.9706942875204625],"v":0.8627200784746587}},{"out":{"u":[3.3685365614444978],"v":0.024854629246871294},"vec":{"du":[2.4550758839433016],"dv":-2.093626331539107},"x":{"u":[2.9706942875204625],"v":0.8627200784746587}},{"out":{"u":[0.04548258957953344],"v":1.2793657032881838},"vec":{"du":[0.7783956086412478],"dv":1.458933661621765},"x":{"u":[-2.451304123458754],"v":0.7765199390209717}},{"out":{"u":[-2.1593225501162943],"v":0.0054980689721534125},"vec":{"du":[2.6005163538445712],"dv":-2.968926805107407},"x":{"u":[-2.451304123458754],"v":0.7765199390209717}},{"out":{"u":[1.221792294411626],"v":9.504303482968098},"vec":{"du":[-1.2581576936112469],"dv":3.9165686572927076},"x":{"u":[4.955002834343926],"v":3.8487866582892636}},{"out":{"u":[7.317031341939856],"v":5.617119147986326},"vec":{"du":[1.5178650215865233],"dv":1.8631609819034711},"x":{"u":[4.955002834343926],"v":3.8487866582892636}},{"out":{"u":[1.1253960427303076],"v":0.12242891930028237},"vec":{"du":[0.14101336766250128],"dv":1.3367718531819508},"x":{"u":[-2.8469130176440105],"v":0.20913372245936446}},{"out":{"u":[-3.014504172211415],"v":0.000007917121181410988},"vec":{"du":[-2.179415690744511],"dv":-0.48657809452088907},"x":{"u":[-2.8469130176440105],"v":0.20913372245936446}},{"out":{"u":[-0.3379397467471126],"v":6.828660891778603},"vec":{"du":[0.33474690278532593],"dv":2.3239020903080436},"x":{"u":[-4.643197212264038],"v":1.0709708260924298}},{"out":{"u":[-4.32663731336218],"v":0.04542450169267007},"vec":{"du":[1.8915376679702742],"dv":-2.9143728618923364},"x":{"u":[-4.643197212264038],"v":1.0709708260924298}},{"out":{"u":[-0.03126564606495719],"v":0.31262941939131755},"vec":{"du":[-2.255873252178523],"dv":0.567470746220674},"x":{"u":[1.2922625449101046],"v":1.0671741410297693}},{"out":{"u":[4.342768829371801],"v":2.585460051394139},"vec":{"du":[0.7707716871977444],"dv":1.7581419485882046},"x":{"u":[1.2922625449101046],"v":1.0671741410297693}},{"out":{"u":[1.9203212088183905],"v":0.25189146250885835},"vec":{"du":[0.11442184051080648],"dv":1.604644885247573},"x":{"u":[-4.882059744574941],"v":0.24255168051306178}},{"out":{"u":[3.412042571551969],"v":1.0713452869069502},"vec":{"du":[0.07802149693325067],"dv":1.355096523306523},"x":{"u":[-4.882059744574941],"v":0.24255168051306178}},{"out":{"u":[3.300477298017455],"v":0.20366770147605187},"vec":{"du":[0.031089613174159574],"dv":0.7046838057370578},"x":{"u":[-1.304636893977933],"v":0.10173455367383723}},{"out":{"u":[-1.343915557852489],"v":4.370197935420228e-12},"vec":{"du":[-1.6414591038171356],"dv":-1.808873112043963},"x":{"u":[-1.304636893977933],"v":0.10173455367383723}},{"out":{"u":[3.4715024636586937,1.397171669425262],"v":3.0446816846262377},"vec":{"du":[0.7056263784602604,-0.29295834008855964],"dv":2.7672689760663247},"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118}},{"out":{"u":[-2.5868492572666373,3.1876732558665375],"v":0.1666238618887682},"vec":{"du":[-0.8212382966978904,-1.9235638345971209],"dv":-0.9236313653251296},"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118}},{"out":{"u":[3.7133937669288057,-1.3873594098584239],"v":1.5716945036828638},"vec":{"du":[0.9243586331399107,-0.21321374525986547],"dv":3.74240064316866},"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835}},{"out":{"u":[-3.364989495864883,0.5292706500265052],"v":0.0956755490138128},"vec":{"du":[2.6887443684648886,0.43999630566672554],"dv":-0.959591595474961},"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835}},{"out":{"u":[-3.4980027092954815,3.1633810381907574],"v":0.5739741625910713},"vec":{"du":[0.07864286673834309,0.3707026046160016],"dv":1.888903169752267},"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987}},{"out":{"u":[-4.586470431984643,-0.7695557503956834],"v":0.0007994318999185507},"vec":{"du":[-1.3708522811472883,2.7122369442451335],"dv":-0.3331307421173202},"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987}},{"out":{"u":[1.3799658078833228,1.7645024381278827],"v":0.20025162009273206},"vec":{"du":[-4.57908776416798,1.1618482097550367],"dv":4.045438329099837},"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732}},{"out":{"u":[6.383959958882177,0.951502939390256],"v":0.5553700066247889},"vec":{"du":[2.8823685052835373,0.09313601463762566],"dv":0.12699677415734367},"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732}},{"out":{"u":[-4.032959060682545,4.678280510488218],"v":0.2691584847320701},"vec":{"du":[-0.25460738366888636,0.5396285107675063],"dv":3.744531548298275},"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011}},{"out":{"u":[0.049817258675992404,-2.2084526431224965],"v":0.018229322852446363},"vec":{"du":[2.379243142296005,1.456604509290237],"dv":0.4839171831169353},"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011}},{"out":{"u":[1.6221473833845383,-3.6838418419169425],"v":4.899464798923215},"vec":{"du":[-0.10698338972384772,-1.8909372008401728],"dv":-0.44928635469677436},"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037}},{"out":{"u":[1.3361985945624997,-0.029065311336047506],"v":4.71124280756311},"vec":{"du":[-0.44010297698245004,2.2691271565096827],"dv":-0.5301231005586695},"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037}},{"out":{"u":[-3.545400462390731,-3.0753650503166767],"v":7.174825937720762},"vec":{"du":[-0.5154611340207604,-0.4587015960408267],"dv":3.8375736326501557},"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082}},{"out":{"u":[5.30139568144599,3.1700748151570104],"v":0.17467991550142514},"vec":{"du":[2.5365574570108045,-2.587707887268831],"dv":-0.42001882859302153},"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082}},{"out":{"u":[1.4157170522248075,0.6969427447380787],"v":0.5656863147140636},"vec":{"du":[3.326217199582933,14.503523034042905],"dv":-5.757593348412048},"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992}},{"out":{"u":[0.6102608303382504,-1.184218266310614],"v":4.160415804208988},"vec":{"du":[0.11708891926715381,2.705629173491099],"dv":-1.4940045200114511},"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992}},{"out":{"u":[3.7621880810927113,-0.32269783185903833],"v":1.2452897069876585},"vec":{"du":[0.024429555539980843,0.011984232539052246],"dv":0.6255796920667089},"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984}},{"out":{"u":[-0.7058605635649666,-2.498669786028005],"v":4.280333740323422e-10},"vec":{"du":[1.8362348835726525,1.0588271999915602],"dv":1.302515425686738},"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984}},{"out":{"u":[-1.2781472743479603,-4.696497056158887],"v":0.1761100759648902},"vec":{"du":[0.0019019534249340886,-0.02741316177654206],"dv":0.8844920249267558},"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739}},{"out":{"u":[-1.7570909151133798,2.5906504528939363],"v":1.7237920902206249e-13},"vec":{"du":[0.7777330970412213,2.82936425076948],"dv":-1.0039112447320508},"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739}}],"geo":[{"out":{"u":[1],"v":1.414213562373095},"s":0.881373587019543,"x":{"u":[0],"v":1},"y":{"u":[2],"v":1}},{"out":{"u":[-0.22654091966098647],"v":0.7039867700441406},"s":-0.4406867935097715,"x":{"u":[0],"v":1},"y":{"u":[2],"v":1}},{"out":{"u":[2.3333333333333335],"v":0.47140452079103173},"s":2.644120761058629,"x":{"u":[0],"v":1},"y":{"u":[2],"v":1}},{"out":{"u":[0],"v":1.6487212707001282},"s":0.5,"x":{"u":[0],"v":1},"y":{"u":[0],"v":2.718281828459045}},{"out":{"u":[0],"v":0.7788007830714049},"s":-0.25,"x":{"u":[0],"v":1},"y":{"u":[0],"v":2.718281828459045}},{"out":{"u":[0],"v":4.4816890703380645},"s":1.5,"x":{"u":[0],"v":1},"y":{"u":[0],"v":2.718281828459045}},{"out":{"u":[0.19999999999999996,-1.5],"v":2.135415650406262},"s":1.6378588436936494,"x":{"u":[1,-2],"v":0.5},"y":{"u":[-3,0.5],"v":2}},{"out":{"u":[1.0306856344843545,-2.0191785215527216],"v":0.2218872506455486},"s":-0.8189294218468247,"x":{"u":[1,-2],"v":0.5},"y":{"u":[-3,0.5],"v":2}},{"out":{"u":[-3.6808510638297856,0.9255319148936159],"v":0.4543437554055877},"s":4.913576531080948,"x":{"u":[1,-2],"v":0.5},"y":{"u":[-3,0.5],"v":2}},{"out":{"u":[2.691611872613941],"v":1.3606174451689963},"s":1.5758058513195303,"x":{"u":[1.2509546660466695],"v":6.229132974474143},"y":{"u":[2.7568569024519354],"v":0.2821073361044684}},{"out":{"u":[-3.2563376861195215],"v":11.295955817316628},"s":-0.7879029256597652,"x":{"u":[1.2509546660466695],"v":6.229132974474143},"y":{"u":[2.7568569024519354],"v":0.2821073361044684}},{"out":{"u":[2.759655282107188],"v":0.05835730609053921},"s":4.727417553958591,"x":{"u":[1.2509546660466695],"v":6.229132974474143},"y":{"u":[2.7568569024519354],"v":0.2821073361044684}},{"out":{"u":[-3.649639926060483],"v":5.163850294937343},"s":0.3160331550041041,"x":{"u":[-1.9983371508877457],"v":5.586076652115128},"y":{"u":[-4.947346954344253],"v":4.389922333427538}},{"out":{"u":[-1.11355688995787],"v":5.602887981828102},"s":-0.15801657750205206,"x":{"u":[-1.9983371508877457],"v":5.586076652115128},"y":{"u":[-4.947346954344253],"v":4.389922333427538}},{"out":{"u":[-5.829505325505599],"v":3.5102944392059263},"s":0.9480994650123123,"x":{"u":[-1.9983371508877457],"v":5.586076652115128},"y":{"u":[-4.947346954344253],"v":4.389922333427538}},{"out":{"u":[-0.5138076402807594],"v":2.3203333939745434},"s":2.1989865688282872,"x":{"u":[2.9706942875204625],"v":0.8627200784746587},"y":{"u":[-1.9696757318068645],"v":0.3604551411348231}},{"out":{"u":[3.1035052418355553],"v":0.295004386589456},"s":-1.0994932844141436,"x":{"u":[2.9706942875204625],"v":0.8627200784746587},"y":{"u":[-1.9696757318068645],"v":0.3604551411348231}},{"out":{"u":[-1.9948850238462663],"v":0.04017806454990078},"s":6.596959706484862,"x":{"u":[2.9706942875204625],"v":0.8627200784746587},"y":{"u":[-1.9696757318068645],"v":0.3604551411348231}},{"out":{"u":[-1.508253291127821],"v":1.5680257948855205},"s":1.0647493779016206,"x":{"u":[-2.451304123458754],"v":0.7765199390209717},"y":{"u":[0.04548258957953344],"v":1.279365703288183}},{"out":{"u":[-2.5758523131526],"v":0.47426952092409497},"s":-0.5323746889508103,"x":{"u":[-2.451304123458754],"v":0.7765199390209717},"y":{"u":[0.04548258957953344],"v":1.279365703288183}},{"out":{"u":[0.5673834462577889],"v":0.526700847811915},"s":3.194248133704862,"x":{"u":[-2.451304123458754],"v":0.7765199390209717},"y":{"u":[0.04548258957953344],"v":1.279365703288183}},{"out":{"u":[3.8789724348873897],"v":6.280067121421864},"s":0.5344142783276471,"x":{"u":[4.955002834343926],"v":3.8487866582892636},"y":{"u":[1.2217922944116264],"v":9.504303482968096}},{"out":{"u":[5.201103953451439],"v":2.9758189554509658},"s":-0.26720713916382355,"x":{"u":[4.955002834343926],"v":3.8487866582892636},"y":{"u":[1.2217922944116264],"v":9.504303482968096}},{"out":{"u":[-3.9401131248933066],"v":12.199817398101588},"s":1.6032428349829413,"x":{"u":[4.955002834343926],"v":3.8487866582892636},"y":{"u":[1.2217922944116264],"v":9.504303482968096}},{"out":{"u":[-0.34137205516924407],"v":1.923707765584074},"s":3.213706686640383,"x":{"u":[-2.8469130176440105],"v":0.20913372245936446},"y":{"u":[1.1253960427303076],"v":0.12242891930028223}},{"out":{"u":[-2.857469592558215],"v":0.042046326914861334},"s":-1.6068533433201915,"x":{"u":[-2.8469130176440105],"v":0.20913372245936446},"y":{"u":[1.1253960427303076],"v":0.12242891930028223}},{"out":{"u":[1.129152865442443],"v":0.004927179037783842},"s":9.64112005992115,"x":{"u":[-2.8469130176440105],"v":0.20913372245936446},"y":{"u":[1.1253960427303076],"v":0.12242891930028223}},{"out":{"u":[-4.059523781773042],"v":3.0798516712590733},"s":1.0961492097682926,"x":{"u":[-4.643197212264038],"v":1.0709708260924298},"y":{"u":[-0.337939746747109],"v":6.828660891778605}},{"out":{"u":[-4.694205340181272],"v":0.621199999876024},"s":-0.5480746048841463,"x":{"u":[-4.643197212264038],"v":1.0709708260924298},"y":{"u":[-0.337939746747109],"v":6.828660891778605}},{"out":{"u":[7.098731325623847],"v":6.154326656414226},"s":3.2884476293048777,"x":{"u":[-4.643197212264038],"v":1.0709708260924298},"y":{"u":[-0.337939746747109],"v":6.828660891778605}},{"out":{"u":[0.2686131640508098],"v":0.8003754059236153},"s":1.089865646679764,"x":{"u":[1.2922625449101046],"v":1.0671741410297693},"y":{"u":[-0.03126564606495741],"v":0.3126294193913177}},{"out":{"u":[1.7507674434750538],"v":0.8261127323414112},"s":-0.544932823339882,"x":{"u":[1.2922625449101046],"v":1.0671741410297693},"y":{"u":[-0.03126564606495741],"v":0.3126294193913177}},{"out":{"u":[-0.07138635019781159],"v":0.10708200704103697},"s":3.269596940039292,"x":{"u":[1.2922625449101046],"v":1.0671741410297693},"y":{"u":[-0.03126564606495741],"v":0.3126294193913177}},{"out":{"u":[-1.5451160433201938],"v":3.4095550601443327},"s":3.316240126545167,"x":{"u":[-4.882059744574941],"v":0.24255168051306178},"y":{"u":[1.9203212088183914],"v":0.2518914625088582}},{"out":{"u":[-4.89038274857493],"v":0.04626176747499258},"s":-1.6581200632725834,"x":{"u":[-4.882059744574941],"v":0.24255168051306178},"y":{"u":[1.9203212088183914],"v":0.2518914625088582}},{"out":{"u":[1.9296246111926214],"v":0.00915337959792981},"s":9.9487203796355,"x":{"u":[-4.882059744574941],"v":0.24255168051306178},"y":{"u":[1.9203212088183914],"v":0.2518914625088582}},{"out":{"u":[0.2294029797936874],"v":2.175286303496323},"s":3.466714409560222,"x":{"u":[-1.304636893977933],"v":0.10173455367383723},"y":{"u":[3.300477298017455],"v":0.20366770147605215}},{"out":{"u":[-1.3068099311881847],"v":0.01798396710448854},"s":-1.733357204780111,"x":{"u":[-1.304636893977933],"v":0.10173455367383723},"y":{"u":[3.300477298017455],"v":0.20366770147605215}},{"out":{"u":[3.3094716134032556],"v":0.006370803517181416},"s":10.400143228680665,"x":{"u":[-1.304636893977933],"v":0.10173455367383723},"y":{"u":[3.300477298017455],"v":0.20366770147605215}},{"out":{"u":[-0.8419503868377545,3.1880088967538778],"v":3.267997729167006},"s":1.3721190678429376,"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118},"y":{"u":[3.471502463658693,1.397171669425262],"v":3.0446816846262377}},{"out":{"u":[-2.421281202245116,3.8437073630471263],"v":0.5339676933741956},"s":-0.6860595339214688,"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118},"y":{"u":[3.471502463658693,1.397171669425262],"v":3.0446816846262377}},{"out":{"u":[4.702116712974969,0.8862515581962729],"v":0.9323492597776473},"s":4.116357203528812,"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118},"y":{"u":[3.471502463658693,1.397171669425262],"v":3.0446816846262377}},{"out":{"u":[-0.9860411112024354,-0.3033817468083062],"v":4.119147860687969},"s":1.8625084258322597,"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835},"y":{"u":[3.7133937669288066,-1.387359409858424],"v":1.5716945036828642}},{"out":{"u":[-4.191226641532833,0.4359304494256359],"v":0.41377662047892777},"s":-0.9312542129161299,"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835},"y":{"u":[3.7133937669288066,-1.387359409858424],"v":1.5716945036828642}},{"out":{"u":[4.001971921013331,-1.4539232161849096],"v":0.25294447457291763},"s":5.587525277496779,"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835},"y":{"u":[3.7133937669288066,-1.387359409858424],"v":1.5716945036828642}},{"out":{"u":[-4.0114787221826145,0.7429848436011923],"v":2.230580441506963},"s":2.1760835831287597,"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987},"y":{"u":[-3.4980027092954815,3.1633810381907566],"v":0.5739741625910711}},{"out":{"u":[-4.41556312407295,-1.161766934634944],"v":0.15042477920330616},"s":-1.0880417915643799,"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987},"y":{"u":[-3.4980027092954815,3.1633810381907566],"v":0.5739741625910711}},{"out":{"u":[-3.482759336056887,3.235234448386011],"v":0.06621841985844379},"s":6.528250749386279,"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987},"y":{"u":[-3.4980027092954815,3.1633810381907566],"v":0.5739741625910711}},{"out":{"u":[1.7543783055806639,1.6695030599627407],"v":1.2383841072135855},"s":1.9169925196248148,"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732},"y":{"u":[1.3799658078833223,1.7645024381278827],"v":0.20025162009273215}},{"out":{"u":[5.386076552503537,0.7480352209805096],"v":0.7310634101034055},"s":-0.9584962598124074,"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732},"y":{"u":[1.3799658078833223,1.7645024381278827],"v":0.20025162009273215}},{"out":{"u":[1.3710436753102826,1.76676624356055],"v":0.029510305475530574},"s":5.750977558874444,"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732},"y":{"u":[1.3799658078833223,1.7645024381278827],"v":0.20025162009273215}},{"out":{"u":[-3.01374318251398,2.5180998489487076],"v":3.701425738945184},"s":2.970405264425143,"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011},"y":{"u":[-4.032959060682543,4.678280510488214],"v":0.26915848473207005}},{"out":{"u":[-0.5764147080831986,-2.6477045199410374],"v":0.1453970417192471},"s":-1.4852026322125715,"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011},"y":{"u":[-4.032959060682543,4.678280510488214],"v":0.26915848473207005}},{"out":{"u":[-4.036764039612608,4.686344986403817],"v":0.013818315873568472},"s":8.91121579327543,"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011},"y":{"u":[-4.032959060682543,4.678280510488214],"v":0.26915848473207005}},{"out":{"u":[1.666715293099293,-2.896101626722304],"v":5.305311596464595},"s":0.17381018709952603,"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037},"y":{"u":[1.6221473833845383,-3.6838418419169425],"v":4.899464798923215}},{"out":{"u":[1.744875047599951,-1.5146237377217047],"v":5.692379766876967},"s":-0.08690509354976302,"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037},"y":{"u":[1.6221473833845383,-3.6838418419169425],"v":4.899464798923215}},{"out":{"u":[1.5849598805728595,-4.341132965842483],"v":4.4267566321389324},"s":0.5214305612985781,"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037},"y":{"u":[1.6221473833845383,-3.6838418419169425],"v":4.899464798923215}},{"out":{"u":[3.1609050517477977,2.892481679227137],"v":5.037464817934236},"s":1.4141565218293095,"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082},"y":{"u":[-3.545400462390731,-3.0753650503166763],"v":7.174825937720761}},{"out":{"u":[4.5188659957429795,4.100911978351513],"v":0.6838483807769878},"s":-0.7070782609146548,"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082},"y":{"u":[-3.545400462390731,-3.0753650503166763],"v":7.174825937720761}},{"out":{"u":[-6.803320598989021,-5.9745422487492466],"v":2.4471980933695305},"s":4.242469565487928,"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082},"y":{"u":[-3.545400462390731,-3.0753650503166763],"v":7.174825937720761}},{"out":{"u":[1.3371855403849682,0.3545166424949251],"v":2.143771917762211},"s":1.3606807152038993,"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992},"y":{"u":[1.4157170522248075,0.6969427447380792],"v":0.5656863147140637}},{"out":{"u":[-0.39637385472657494,-7.20443609848493],"v":6.009516288249441},"s":-0.6803403576019497,"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992},"y":{"u":[1.4157170522248075,0.6969427447380792],"v":0.5656863147140637}},{"out":{"u":[1.4210421634123653,0.720162176342626],"v":0.1453661537311104},"s":4.082042145611698,"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992},"y":{"u":[1.4157170522248075,0.6969427447380792],"v":0.5656863147140637}},{"out":{"u":[-0.48413724597631647,-2.405787312254154],"v":1.5129144067613673},"s":2.6275350758907714,"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984},"y":{"u":[3.7621880810927095,-0.3226978318590392],"v":1.2452897069876583}},{"out":{"u":[-0.8926045521807502,-2.606166200611041],"v":0.03204372004621287},"s":-1.3137675379453857,"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984},"y":{"u":[3.7621880810927095,-0.3226978318590392],"v":1.2452897069876583}},{"out":{"u":[4.029224604331629,-0.1916996323347857],"v":0.09514188669535678},"s":7.882605227672315,"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984},"y":{"u":[3.7621880810927095,-0.3226978318590392],"v":1.2452897069876583}},{"out":{"u":[-1.583589488064594,-0.2941091174061885],"v":3.5268047058049916},"s":3.9398498683322423,"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739},"y":{"u":[-1.2781472743479605,-4.696497056158884],"v":0.17611007596489023}},{"out":{"u":[-1.7784852696089313,2.5149552471566112],"v":0.015666389048004836},"s":-1.9699249341661211,"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739},"y":{"u":[-1.2781472743479605,-4.696497056158884],"v":0.17611007596489023}},{"out":{"u":[-1.277850426174255,-4.700775576811481],"v":0.0034275731674228717},"s":11.819549604996727,"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739},"y":{"u":[-1.2781472743479605,-4.696497056158884],"v":0.17611007596489023}}],"gerp":[{"a":0.25,"out":{"u":[0.4142135623730951],"v":1.287188505811165},"x":{"u":[0],"v":1},"y":{"u":[2],"v":1}},{"a":0.5,"out":{"u":[1],"v":1.414213562373095},"x":{"u":[0],"v":1},"y":{"u":[2],"v":1}},{"a":2,"out":{"u":[2.4000000000000004],"v":0.19999999999999998},"x":{"u":[0],"v":1},"y":{"u":[2],"v":1}},{"a":0.25,"out":{"u":[0],"v":1.2840254166877414},"x":{"u":[0],"v":1},"y":{"u":[0],"v":2.718281828459045}},{"a":0.5,"out":{"u":[0],"v":1.6487212707001282},"x":{"u":[0],"v":1},"y":{"u":[0],"v":2.718281828459045}},{"a":2,"out":{"u":[0],"v":7.38905609893065},"x":{"u":[0],"v":1},"y":{"u":[0],"v":2.718281828459045}},{"a":0.25,"out":{"u":[0.8482212853451264,-1.905138303340704],"v":1.0975090548789617},"x":{"u":[1,-2],"v":0.5},"y":{"u":[-3,0.5],"v":2}},{"a":0.5,"out":{"u":[0.19999999999999996,-1.5],"v":2.135415650406262},"x":{"u":[1,-2],"v":0.5},"y":{"u":[-3,0.5],"v":2}},{"a":2,"out":{"u":[-3.711111111111113,0.9444444444444455],"v":0.08888888888888893},"x":{"u":[1,-2],"v":0.5},"y":{"u":[-3,0.5],"v":2}},{"a":0.25,"out":{"u":[2.4333447071099634],"v":2.9632481363821888},"x":{"u":[1.2509546660466695],"v":6.229132974474143},"y":{"u":[2.7568569024519354],"v":0.2821073361044684}},{"a":0.5,"out":{"u":[2.691611872613941],"v":1.3606174451689963},"x":{"u":[1.2509546660466695],"v":6.229132974474143},"y":{"u":[2.7568569024519354],"v":0.2821073361044684}},{"a":2,"out":{"u":[2.7597750183467653],"v":0.012070725113745512},"x":{"u":[1.2509546660466695],"v":6.229132974474143},"y":{"u":[2.7568569024519354],"v":0.2821073361044684}},{"a":0.25,"out":{"u":[-2.856417761425714],"v":5.4338119333382675},"x":{"u":[-1.9983371508877457],"v":5.586076652115128},"y":{"u":[-4.947346954344253],"v":4.389922333427538}},{"a":0.5,"out":{"u":[-3.649639926060483],"v":5.163850294937343},"x":{"u":[-1.9983371508877457],"v":5.586076652115128},"y":{"u":[-4.947346954344253],"v":4.389922333427538}},{"a":2,"out":{"u":[-6.371665326974243],"v":2.6979739427116995},"x":{"u":[-1.9983371508877457],"v":5.586076652115128},"y":{"u":[-4.947346954344253],"v":4.389922333427538}},{"a":0.25,"out":{"u":[2.0262710151446184],"v":2.0977863579463847},"x":{"u":[2.9706942875204625],"v":0.8627200784746587},"y":{"u":[-1.9696757318068645],"v":0.3604551411348231}},{"a":0.5,"out":{"u":[-0.5138076402807594],"v":2.3203333939745434},"x":{"u":[2.9706942875204625],"v":0.8627200784746587},"y":{"u":[-1.9696757318068645],"v":0.3604551411348231}},{"a":2,"out":{"u":[-1.995196709753034],"v":0.004456641913527047},"x":{"u":[2.9706942875204625],"v":0.8627200784746587},"y":{"u":[-1.9696757318068645],"v":0.3604551411348231}},{"a":0.25,"out":{"u":[-2.138963116744786],"v":1.1893695121808905},"x":{"u":[-2.451304123458754],"v":0.7765199390209717},"y":{"u":[0.04548258957953344],"v":1.279365703288183}},{"a":0.5,"out":{"u":[-1.508253291127821],"v":1.5680257948855205},"x":{"u":[-2.451304123458754],"v":0.7765199390209717},"y":{"u":[0.04548258957953344],"v":1.279365703288183}},{"a":2,"out":{"u":[0.6432192643366954],"v":0.18590071943638706},"x":{"u":[-2.451304123458754],"v":0.7765199390209717},"y":{"u":[0.04548258957953344],"v":1.279365703288183}},{"a":0.25,"out":{"u":[4.54613016864926],"v":4.944028833970486},"x":{"u":[4.955002834343926],"v":3.8487866582892636},"y":{"u":[1.2217922944116264],"v":9.504303482968096}},{"a":0.5,"out":{"u":[3.8789724348873897],"v":6.280067121421864},"x":{"u":[4.955002834343926],"v":3.8487866582892636},"y":{"u":[1.2217922944116264],"v":9.504303482968096}},{"a":2,"out":{"u":[-10.507854311539848],"v":12.09278364574977},"x":{"u":[4.955002834343926],"v":3.8487866582892636},"y":{"u":[1.2217922944116264],"v":9.504303482968096}},{"a":0.25,"out":{"u":[-2.601234606381741],"v":0.9785252205199256},"x":{"u":[-2.8469130176440105],"v":0.20913372245936446},"y":{"u":[1.1253960427303076],"v":0.12242891930028223}},{"a":0.5,"out":{"u":[-0.34137205516924407],"v":1.923707765584074},"x":{"u":[-2.8469130176440105],"v":0.20913372245936446},"y":{"u":[1.1253960427303076],"v":0.12242891930028223}},{"a":2,"out":{"u":[1.1291589445609551],"v":0.00019810887197650175},"x":{"u":[-2.8469130176440105],"v":0.20913372245936446},"y":{"u":[1.1253960427303076],"v":0.12242891930028223}},{"a":0.25,"out":{"u":[-4.492601224018336],"v":1.8340259033100743},"x":{"u":[-4.643197212264038],"v":1.0709708260924298},"y":{"u":[-0.337939746747109],"v":6.828660891778605}},{"a":0.5,"out":{"u":[-4.059523781773042],"v":3.0798516712590733},"x":{"u":[-4.643197212264038],"v":1.0709708260924298},"y":{"u":[-0.337939746747109],"v":6.828660891778605}},{"a":2,"out":{"u":[9.861965364350912],"v":2.5373164997428193},"x":{"u":[-4.643197212264038],"v":1.0709708260924298},"y":{"u":[-0.337939746747109],"v":6.828660891778605}},{"a":0.25,"out":{"u":[0.7073184128969686],"v":1.0539250434987348},"x":{"u":[1.2922625449101046],"v":1.0671741410297693},"y":{"u":[-0.03126564606495741],"v":0.3126294193913177}},{"a":0.5,"out":{"u":[0.2686131640508098],"v":0.8003754059236153},"x":{"u":[1.2922625449101046],"v":1.0671741410297693},"y":{"u":[-0.03126564606495741],"v":0.3126294193913177}},{"a":2,"out":{"u":[-0.07601705994695118],"v":0.03608351676604748},"x":{"u":[1.2922625449101046],"v":1.0671741410297693},"y":{"u":[-0.03126564606495741],"v":0.3126294193913177}},{"a":0.25,"out":{"u":[-4.660439359413054],"v":1.2318329687324203},"x":{"u":[-4.882059744574941],"v":0.24255168051306178},"y":{"u":[1.9203212088183914],"v":0.2518914625088582}},{"a":0.5,"out":{"u":[-1.5451160433201938],"v":3.4095550601443327},"x":{"u":[-4.882059744574941],"v":0.24255168051306178},"y":{"u":[1.9203212088183914],"v":0.2518914625088582}},{"a":2,"out":{"u":[1.9296368795331933],"v":0.00033216775162458914},"x":{"u":[-4.882059744574941],"v":0.24255168051306178},"y":{"u":[1.9203212088183914],"v":0.2518914625088582}},{"a":0.25,"out":{"u":[-1.2360978371728144],"v":0.5672264318074612},"x":{"u":[-1.304636893977933],"v":0.10173455367383723},"y":{"u":[3.300477298017455],"v":0.20366770147605215}},{"a":0.5,"out":{"u":[0.2294029797936874],"v":2.175286303496323},"x":{"u":[-1.304636893977933],"v":0.10173455367383723},"y":{"u":[3.300477298017455],"v":0.20366770147605215}},{"a":2,"out":{"u":[3.3094803968717743],"v":0.00019889327505013293},"x":{"u":[-1.304636893977933],"v":0.10173455367383723},"y":{"u":[3.300477298017455],"v":0.20366770147605215}},{"a":0.25,"out":{"u":[-1.9646265610410425,3.654115831657946],"v":1.972747400693868},"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118},"y":{"u":[3.471502463658693,1.397171669425262],"v":3.0446816846262377}},{"a":0.5,"out":{"u":[-0.8419503868377545,3.1880088967538778],"v":3.267997729167006},"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118},"y":{"u":[3.471502463658693,1.397171669425262],"v":3.0446816846262377}},{"a":2,"out":{"u":[4.798965090971188,0.8460425454323892],"v":0.23961406495550894},"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118},"y":{"u":[3.471502463658693,1.397171669425262],"v":3.0446816846262377}},{"a":0.25,"out":{"u":[-3.462043740243376,0.2677361882488186],"v":2.4277301303819647},"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835},"y":{"u":[3.7133937669288066,-1.387359409858424],"v":1.5716945036828642}},{"a":0.5,"out":{"u":[-0.9860411112024354,-0.3033817468083062],"v":4.119147860687969},"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835},"y":{"u":[3.7133937669288066,-1.387359409858424],"v":1.5716945036828642}},{"a":2,"out":{"u":[4.00919005434768,-1.4555881600571532],"v":0.03931240230029932},"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835},"y":{"u":[3.7133937669288066,-1.387359409858424],"v":1.5716945036828642}},{"a":0.25,"out":{"u":[-4.341909107917628,-0.8145805112298725],"v":1.2208635360425402},"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987},"y":{"u":[-3.4980027092954815,3.1633810381907566],"v":0.5739741625910711}},{"a":0.5,"out":{"u":[-4.0114787221826145,0.7429848436011923],"v":2.230580441506963},"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987},"y":{"u":[-3.4980027092954815,3.1633810381907566],"v":0.5739741625910711}},{"a":2,"out":{"u":[-3.4825597182474333,3.2361753963061632],"v":0.007516411441622971},"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987},"y":{"u":[-3.4980027092954815,3.1633810381907566],"v":0.5739741625910711}},{"a":0.25,"out":{"u":[3.067433116131986,1.3363427320723038],"v":2.1006804366330507},"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732},"y":{"u":[1.3799658078833223,1.7645024381278827],"v":0.20025162009273215}},{"a":0.5,"out":{"u":[1.7543783055806639,1.6695030599627407],"v":1.2383841072135855},"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732},"y":{"u":[1.3799658078833223,1.7645024381278827],"v":0.20025162009273215}},{"a":2,"out":{"u":[1.3708503238983596,1.7668153024568554],"v":0.004339650096864955},"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732},"y":{"u":[1.3799658078833223,1.7645024381278827],"v":0.20025162009273215}},{"a":0.25,"out":{"u":[-0.9523273192937656,-1.850975219937347],"v":2.527215403362098},"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011},"y":{"u":[-4.032959060682543,4.678280510488214],"v":0.26915848473207005}},{"a":0.5,"out":{"u":[-3.01374318251398,2.5180998489487076],"v":3.701425738945184},"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011},"y":{"u":[-4.032959060682543,4.678280510488214],"v":0.26915848473207005}},{"a":2,"out":{"u":[-4.036774057356834,4.686366218546894],"v":0.0007086401543663274},"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011},"y":{"u":[-4.032959060682543,4.678280510488214],"v":0.26915848473207005}},{"a":0.25,"out":{"u":[1.6914962424184983,-2.4580970069324817],"v":5.46905454214018},"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037},"y":{"u":[1.6221473833845383,-3.6838418419169425],"v":4.899464798923215}},{"a":0.5,"out":{"u":[1.666715293099293,-2.896101626722304],"v":5.305311596464595},"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037},"y":{"u":[1.6221473833845383,-3.6838418419169425],"v":4.899464798923215}},{"a":2,"out":{"u":[1.5551404304798386,-4.868193359376837],"v":3.928721613652456},"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037},"y":{"u":[1.6221473833845383,-3.6838418419169425],"v":4.899464798923215}},{"a":0.25,"out":{"u":[4.172609219865734,3.792782955129276],"v":2.7288428061230525},"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082},"y":{"u":[-3.545400462390731,-3.0753650503166763],"v":7.174825937720761}},{"a":0.5,"out":{"u":[3.1609050517477977,2.892481679227137],"v":5.037464817934236},"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082},"y":{"u":[-3.545400462390731,-3.0753650503166763],"v":7.174825937720761}},{"a":2,"out":{"u":[-7.080082044013489,-6.220828356811422],"v":0.6095039507002785},"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082},"y":{"u":[-3.545400462390731,-3.0753650503166763],"v":7.174825937720761}},{"a":0.25,"out":{"u":[1.1192602337555375,-0.5957173665160083],"v":3.8946204458584788},"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992},"y":{"u":[1.4157170522248075,0.6969427447380792],"v":0.5656863147140637}},{"a":0.5,"out":{"u":[1.3371855403849682,0.3545166424949251],"v":2.143771917762211},"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992},"y":{"u":[1.4157170522248075,0.6969427447380792],"v":0.5656863147140637}},{"a":2,"out":{"u":[1.4213931854854467,0.7216927609126991],"v":0.03728905855877187},"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992},"y":{"u":[1.4157170522248075,0.6969427447380792],"v":0.5656863147140637}},{"a":0.25,"out":{"u":[-0.8607829388283318,-2.5905556990790313],"v":0.4406063567961684},"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984},"y":{"u":[3.7621880810927095,-0.3226978318590392],"v":1.2452897069876583}},{"a":0.5,"out":{"u":[-0.48413724597631647,-2.405787312254154],"v":1.5129144067613673},"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984},"y":{"u":[3.7621880810927095,-0.3226978318590392],"v":1.2452897069876583}},{"a":2,"out":{"u":[4.030699217592352,-0.19097624184195627],"v":0.006876665008568645},"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984},"y":{"u":[3.7621880810927095,-0.3226978318590392],"v":1.2452897069876583}},{"a":0.25,"out":{"u":[-1.7723560319344864,2.426613555013305],"v":0.7955621494165966},"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739},"y":{"u":[-1.2781472743479605,-4.696497056158884],"v":0.17611007596489023}},{"a":0.5,"out":{"u":[-1.583589488064594,-0.2941091174061885],"v":3.5268047058049916},"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739},"y":{"u":[-1.2781472743479605,-4.696497056158884],"v":0.17611007596489023}},{"a":2,"out":{"u":[-1.2778503137960857,-4.700777196536178],"v":0.00006667020253616665},"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739},"y":{"u":[-1.2781472743479605,-4.696497056158884],"v":0.17611007596489023}}],"log_map":[{"out":{"du":[1.2464504802804612],"dv":1.246450480280461},"x":{"u":[0],"v":1},"y":{"u":[2],"v":1}},{"out":{"du":[0],"dv":1},"x":{"u":[0],"v":1},"y":{"u":[0],"v":2.718281828459045}},{"out":{"du":[-0.24793108968884314,0.15495693105552696],"dv":1.6115520829774799},"x":{"u":[1,-2],"v":0.5},"y":{"u":[-3,0.5],"v":2}},{"out":{"du":[8.983401032874102],"dv":-17.45584160496872},"x":{"u":[1.2509546660466695],"v":6.229132974474143},"y":{"u":[2.7568569024519354],"v":0.2821073361044684}},{"out":{"du":[-3.5138606585624412],"dv":-0.3451465142819098},"x":{"u":[-1.9983371508877457],"v":5.586076652115128},"y":{"u":[-4.947346954344253],"v":4.389922333427538}},{"out":{"du":[-1.279708325178525],"dv":3.5718972501170327},"x":{"u":[2.9706942875204625],"v":0.8627200784746587},"y":{"u":[-1.9696757318068645],"v":0.3604551411348231}},{"out":{"du":[0.7783956086412478],"dv":1.458933661621765},"x":{"u":[-2.451304123458754],"v":0.7765199390209717},"y":{"u":[0.04548258957953344],"v":1.279365703288183}},{"out":{"du":[-1.2581576936112469],"dv":3.9165686572927076},"x":{"u":[4.955002834343926],"v":3.8487866582892636},"y":{"u":[1.2217922944116264],"v":9.504303482968096}},{"out":{"du":[0.14101336766250128],"dv":1.3367718531819508},"x":{"u":[-2.8469130176440105],"v":0.20913372245936446},"y":{"u":[1.1253960427303076],"v":0.12242891930028223}},{"out":{"du":[0.33474690278532593],"dv":2.3239020903080436},"x":{"u":[-4.643197212264038],"v":1.0709708260924298},"y":{"u":[-0.337939746747109],"v":6.828660891778605}},{"out":{"du":[-2.255873252178523],"dv":0.567470746220674},"x":{"u":[1.2922625449101046],"v":1.0671741410297693},"y":{"u":[-0.03126564606495741],"v":0.3126294193913177}},{"out":{"du":[0.11442184051080648],"dv":1.604644885247573},"x":{"u":[-4.882059744574941],"v":0.24255168051306178},"y":{"u":[1.9203212088183914],"v":0.2518914625088582}},{"out":{"du":[0.031089613174159574],"dv":0.7046838057370578},"x":{"u":[-1.304636893977933],"v":0.10173455367383723},"y":{"u":[3.300477298017455],"v":0.20366770147605215}},{"out":{"du":[0.7056263784602604,-0.29295834008855964],"dv":2.7672689760663247},"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118},"y":{"u":[3.471502463658693,1.397171669425262],"v":3.0446816846262377}},{"out":{"du":[0.9243586331399107,-0.21321374525986547],"dv":3.74240064316866},"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835},"y":{"u":[3.7133937669288066,-1.387359409858424],"v":1.5716945036828642}},{"out":{"du":[0.07864286673834309,0.3707026046160016],"dv":1.888903169752267},"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987},"y":{"u":[-3.4980027092954815,3.1633810381907566],"v":0.5739741625910711}},{"out":{"du":[-4.57908776416798,1.1618482097550367],"dv":4.045438329099837},"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732},"y":{"u":[1.3799658078833223,1.7645024381278827],"v":0.20025162009273215}},{"out":{"du":[-0.25460738366888636,0.5396285107675063],"dv":3.744531548298275},"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011},"y":{"u":[-4.032959060682543,4.678280510488214],"v":0.26915848473207005}},{"out":{"du":[-0.10698338972384772,-1.8909372008401728],"dv":-0.44928635469677436},"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037},"y":{"u":[1.6221473833845383,-3.6838418419169425],"v":4.899464798923215}},{"out":{"du":[-0.5154611340207604,-0.4587015960408267],"dv":3.8375736326501557},"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082},"y":{"u":[-3.545400462390731,-3.0753650503166763],"v":7.174825937720761}},{"out":{"du":[3.326217199582933,14.503523034042905],"dv":-5.757593348412048},"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992},"y":{"u":[1.4157170522248075,0.6969427447380792],"v":0.5656863147140637}},{"out":{"du":[0.024429555539980843,0.011984232539052246],"dv":0.6255796920667089},"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984},"y":{"u":[3.7621880810927095,-0.3226978318590392],"v":1.2452897069876583}},{"out":{"du":[0.0019019534249340886,-0.02741316177654206],"dv":0.8844920249267558},"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739},"y":{"u":[-1.2781472743479605,-4.696497056158884],"v":0.17611007596489023}}],"transport":[{"out":{"du":[0.9465643802310872],"dv":-2.8028894123842063},"vec":{"du":[2.8028894123842063],"dv":0.9465643802310866},"x":{"u":[0],"v":1},"y":{"u":[2],"v":1}},{"out":{"du":[-1.170705599344443],"dv":0.3871938236322934},"vec":{"du":[-0.43067852166311216],"dv":0.1424406474628821},"x":{"u":[0],"v":1},"y":{"u":[0],"v":2.718281828459045}},{"out":{"du":[-5.2433166617688265,5.130267049981761],"dv":6.702227467123982},"vec":{"du":[2.236855251388646,-0.934735998023843],"dv":0.541745893738288},"x":{"u":[1,-2],"v":0.5},"y":{"u":[-3,0.5],"v":2}},{"out":{"du":[0.027593792911839905],"dv":-0.05721392652863478},"vec":{"du":[1.102106240037262],"dv":-0.8675173378589278},"x":{"u":[1.2509546660466695],"v":6.229132974474143},"y":{"u":[2.7568569024519354],"v":0.2821073361044684}},{"out":{"du":[-0.6044356226282388],"dv":1.0986407943355265},"vec":{"du":[0.11459091897594043],"dv":1.5914842996711354},"x":{"u":[-1.9983371508877457],"v":5.586076652115128},"y":{"u":[-4.947346954344253],"v":4.389922333427538}},{"out":{"du":[-0.49913413959083996],"dv":1.2522884562560184},"vec":{"du":[2.4550758839433016],"dv":-2.093626331539107},"x":{"u":[2.9706942875204625],"v":0.8627200784746587},"y":{"u":[-1.9696757318068645],"v":0.3604551411348231}},{"out":{"du":[-5.6227462450528884],"dv":-3.266269214125994},"vec":{"du":[2.6005163538445712],"dv":-2.968926805107407},"x":{"u":[-2.451304123458754],"v":0.7765199390209717},"y":{"u":[0.04548258957953344],"v":1.279365703288183}},{"out":{"du":[0.8186634096447283],"dv":5.877747177255516},"vec":{"du":[1.5178650215865233],"dv":1.8631609819034711},"x":{"u":[4.955002834343926],"v":3.8487866582892636},"y":{"u":[1.2217922944116264],"v":9.504303482968096}},{"out":{"du":[1.210973910970172],"dv":0.4924190959894209},"vec":{"du":[-2.179415690744511],"dv":-0.48657809452088907},"x":{"u":[-2.8469130176440105],"v":0.20913372245936446},"y":{"u":[1.1253960427303076],"v":0.12242891930028223}},{"out":{"du":[-9.07945540006094],"dv":-20.207220369812507},"vec":{"du":[1.8915376679702742],"dv":-2.9143728618923364},"x":{"u":[-4.643197212264038],"v":1.0709708260924298},"y":{"u":[-0.337939746747109],"v":6.828660891778605}},{"out":{"du":[-0.5052059033569841],"dv":0.2470367981276271},"vec":{"du":[0.7707716871977444],"dv":1.7581419485882046},"x":{"u":[1.2922625449101046],"v":1.0671741410297693},"y":{"u":[-0.03126564606495741],"v":0.3126294193913177}},{"out":{"du":[0.12333142677265183],"dv":-1.4042012978804095},"vec":{"du":[0.07802149693325067],"dv":1.355096523306523},"x":{"u":[-4.882059744574941],"v":0.24255168051306178},"y":{"u":[1.9203212088183914],"v":0.2518914625088582}},{"out":{"du":[2.779134754961084],"dv":4.0235134050233965},"vec":{"du":[-1.6414591038171356],"dv":-1.808873112043963},"x":{"u":[-1.304636893977933],"v":0.10173455367383723},"y":{"u":[3.300477298017455],"v":0.20366770147605215}},{"out":{"du":[-4.5829498453715924,-4.688052527545387],"dv":1.1403969496694404},"vec":{"du":[-0.8212382966978904,-1.9235638345971209],"dv":-0.9236313653251296},"x":{"u":[-2.3240069543621455,3.8033215398082874],"v":1.0461202760573118},"y":{"u":[3.471502463658693,1.397171669425262],"v":3.0446816846262377}},{"out":{"du":[-3.493259844530352,2.4134617091637005],"dv":-1.0767667858612644},"vec":{"du":[2.6887443684648886,0.43999630566672554],"dv":-0.959591595474961},"x":{"u":[-4.085043949369544,0.4114382137648871],"v":1.0364407325464835},"y":{"u":[3.7133937669288066,-1.387359409858424],"v":1.5716945036828642}},{"out":{"du":[-3.026648445702084,-2.3713598459643146],"dv":-0.96437001949294},"vec":{"du":[-1.3708522811472883,2.7122369442451335],"dv":-0.3331307421173202},"x":{"u":[-4.407483576544964,-1.123681988892713],"v":0.44266245931645987},"y":{"u":[-3.4980027092954815,3.1633810381907566],"v":0.5739741625910711}},{"out":{"du":[-0.17924159798956557,0.14725405424019325],"dv":0.2704891985971781},"vec":{"du":[2.8823685052835373,0.09313601463762566],"dv":0.12699677415734367},"x":{"u":[4.787478844112217,0.8999169301061025],"v":1.6222302954108732},"y":{"u":[1.3799658078833223,1.7645024381278827],"v":0.20025162009273215}},{"out":{"du":[1.0913237828348494,0.4277943922364614],"dv":-0.22730534757356302},"vec":{"du":[2.379243142296005,1.456604509290237],"dv":0.4839171831169353},"x":{"u":[-0.5968653281181249,-2.6043603817047667],"v":0.6382584838068011},"y":{"u":[-4.032959060682543,4.678280510488214],"v":0.26915848473207005}},{"out":{"du":[-0.38245140124898785,2.0318529350453653],"dv":0.17507624219454493},"vec":{"du":[-0.44010297698245004,2.2691271565096827],"dv":-0.5301231005586695},"x":{"u":[1.7176516261128496,-1.995799185209297],"v":5.599561931071037},"y":{"u":[1.6221473833845383,-3.6838418419169425],"v":4.899464798923215}},{"out":{"du":[13.9654508438934,-12.787563608110814],"dv":1.3684566757054868},"vec":{"du":[2.5365574570108045,-2.587707887268831],"dv":-0.42001882859302153},"x":{"u":[4.4494817114497955,4.039167881959267],"v":1.378600068440082},"y":{"u":[-3.545400462390731,-3.0753650503166763],"v":7.174825937720761}},{"out":{"du":[-0.049563001603974394,-0.004319624950276855],"dv":-0.29424607248197027},"vec":{"du":[0.11708891926715381,2.705629173491099],"dv":-1.4940045200114511},"x":{"u":[0.5232648766726378,-3.194475015510884],"v":5.862917572044992},"y":{"u":[1.4157170522248075,0.6969427447380792],"v":0.5656863147140637}},{"out":{"du":[-11.905548318780907,-4.188766373409022],"dv":-22.73181390366242},"vec":{"du":[1.8362348835726525,1.0588271999915602],"dv":1.302515425686738},"x":{"u":[-0.8904471784287011,-2.6051078731815513],"v":0.1191556316950984},"y":{"u":[3.7621880810927095,-0.3226978318590392],"v":1.2452897069876583}},{"out":{"du":[1.8110093491985348,-4.087034804007666],"dv":1.9152792384120878},"vec":{"du":[0.7777330970412213,2.82936425076948],"dv":-1.0039112447320508},"x":{"u":[-1.7783669021977486,2.5132491985492784],"v":0.11230361639225739},"y":{"u":[-1.2781472743479605,-4.696497056158884],"v":0.17611007596489023}}]},"rate":60,"schema_version":1,"seed":7};
