#include "chebyshev_table.hpp"

namespace ngopt::internal {

const std::array<std::array<double, 3>, 200> kPolytopeRows = {{
    {{0.1552476688949955, -1.3423448558182673, 3.2477704603133541}},
    {{1.1650345433446192, 1.0624409694058936, 3.5091952710957135}},
    {{1.1742867826807686, -0.094775544947614157, 2.3426366184710958}},
    {{-0.10755690923221985, 1.4866054298572711, 2.14057556721606}},
    {{1.4794169747025747, -0.77330921841959321, 3.2370458790949614}},
    {{-0.58261453745304892, 0.97668686053046527, 1.2318312023622564}},
    {{-0.80614837660110517, 0.045519346625851068, 2.3776827705740184}},
    {{0.66183474848713675, -0.083535201336424295, 0.68420987619554319}},
    {{0.77135958442665431, 1.3726329699644348, 2.5174956593432456}},
    {{-1.7031633249643123, -0.2388365538563883, 2.4610119926396354}},
    {{0.5926162631922538, 1.2558375684688747, 2.6035426021229036}},
    {{0.8409662788356792, -0.73185658771442297, 1.762797596569524}},
    {{0.3419042373720278, 0.96238125044870071, 1.4653878153364621}},
    {{-0.97371221812189557, -0.57159302879950591, 2.4945912553017768}},
    {{1.7942956976979136, -0.77855781405516022, 2.3479345713605326}},
    {{-0.2182862687958633, -1.4291829891432588, 3.4327153213400505}},
    {{-0.26596776878493594, 1.2984172649523282, 2.3480079972192405}},
    {{0.48459975796986748, 1.6905136380721175, 3.2553123732486253}},
    {{0.2155141429166757, 0.70867964528787863, 2.1076969350834398}},
    {{1.3498587111087845, 0.25696560850368555, 3.0841505921388226}},
    {{0.43230074338626739, -0.63899444639352221, 1.1327885670871567}},
    {{-0.20190686093554391, -0.89239848798726507, 1.5856474017571378}},
    {{-0.36701697791773996, 0.36657462326589563, 0.84544898887025655}},
    {{0.67858918835073645, -1.3113532918196336, 2.0236281811100771}},
    {{-1.288703355854383, 1.0935838904390676, 2.7695246338740254}},
    {{0.88604343907366068, -0.84477432885820369, 3.2380224537409714}},
    {{1.2895407296874346, 1.2571413549550614, 4.248692048889863}},
    {{-0.68312002783877368, 0.11741043040685332, 1.7192472606753764}},
    {{-0.10841864500571376, -0.99439537488311702, 1.4634249151066958}},
    {{0.062290968876500957, -1.1356323287689487, 2.4993290651309978}},
    {{-0.34332780360800508, -0.76064791283066802, 1.4340647783179956}},
    {{-0.87192936203813687, -1.0012144932909048, 2.4283231951846753}},
    {{-0.72578514615224166, 0.23752506431979195, 1.0344667185692433}},
    {{1.1696979319502132, -0.40131548901416247, 1.5706985337817434}},
    {{-1.1919384051353852, 1.5472265600350614, 2.2800930187025195}},
    {{-0.69509598067373846, -0.15595638785485064, 1.6974938068723984}},
    {{-0.058228799751567001, -0.63752486745067449, 1.7810870986326874}},
    {{0.54689348186614462, -0.38094194518718982, 1.7777338191260974}},
    {{0.72731750387366723, 0.2393095088648006, 2.20231252169628}},
    {{1.1187945582581158, -0.2647536942079422, 1.6059321239532265}},
    {{0.60838125463900394, -0.67895527771410169, 1.6932673812862722}},
    {{1.6395282559422, -0.49682232508655855, 3.9123762449197539}},
    {{-0.16539804147584328, 1.312119035552056, 2.3640753254127276}},
    {{1.4814113645266902, -0.98699806850415639, 4.0570099326310212}},
    {{-0.60552462122688744, 1.2168908618096217, 3.4540576519129034}},
    {{-0.086089618490624617, 1.9464126506304076, 5.5039176218693528}},
    {{0.78261195421965257, -1.4365338834477182, 3.2424676104065964}},
    {{1.5990702050604217, -0.10868445330568471, 2.8660644595769886}},
    {{1.2808781384730377, -0.34234676039254974, 1.3415368413645965}},
    {{0.81099208059201211, 1.5125874030519713, 1.7676531991292381}},
    {{-0.46637373783192343, -0.46736180596281363, 0.85819520464282084}},
    {{-1.732991496618961, 0.83647240507454312, 3.8475163657889784}},
    {{1.0178615606074186, -0.073551108775680843, 2.4881965940871242}},
    {{-1.8828031227024955, -0.2903711892154669, 2.0081441635834341}},
    {{1.9464930888439305, -0.19817165476820583, 5.4630601098991409}},
    {{-0.29537070616002875, -0.92829765778293094, 1.4829920060117567}},
    {{-0.059814438238493028, -0.8176118852508053, 1.5809663166233499}},
    {{0.22365485885366637, -1.5861847965393023, 2.815495341167972}},
    {{-0.15592543592108424, 0.54907764927917002, 1.7011516085177751}},
    {{0.52439144419890427, -1.1693475612585129, 1.3384604688075308}},
    {{-1.2146768232114717, -1.4439764640538353, 4.9407323989451379}},
    {{-1.533710871225104, 1.2131622943551388, 5.2769506350119313}},
    {{0.38828989285762949, -0.46945592398332459, 1.354739674680161}},
    {{1.4165073074893793, -0.76583832535138596, 2.9250677988221989}},
    {{-1.622906814643813, -0.66296891579360395, 1.7941982288016347}},
    {{-0.92959519395450352, 0.88252194882185553, 2.0455504443236272}},
    {{1.2313867794250755, -1.3960408647134408, 4.9773387053548408}},
    {{1.3748498673406973, 0.57017522809313503, 3.0991725208127594}},
    {{0.099033511574143279, -0.5424273682908537, 0.83264802935953763}},
    {{-1.1326216229399939, 0.31341369161584026, 2.9460840998640783}},
    {{-1.1047710142574814, -0.72126870846115332, 2.5806094472159393}},
    {{0.046673673138746923, 1.0611273506520602, 1.3035928945356092}},
    {{0.22761569467157985, -0.70083455772083536, 2.0632299636442082}},
    {{-0.8949773254079505, -0.77702332293669241, 2.3432120802039087}},
    {{0.048350932322958409, 1.2947819306447295, 1.9627027506745036}},
    {{0.026114965097336316, -0.58240647816430569, 1.529260619550308}},
    {{-0.49656846383779796, -1.5330843137576937, 2.8415551135157604}},
    {{0.9636742268009254, -0.21212758732090067, 2.6650202676765002}},
    {{-1.4327209289901874, -0.8433463384118739, 3.911698569432803}},
    {{-1.251716975556818, 0.33892051832895231, 1.4131072453937579}},
    {{1.3605194587370484, 1.3155387262395246, 4.922392804829677}},
    {{-1.6053463607449165, -0.26097743861947753, 3.793365597423445}},
    {{1.5339022959862225, -0.5474860858065943, 4.1833122971766041}},
    {{1.1873663961293779, -1.4915960831745256, 4.4609082880374444}},
    {{-0.32257513806841986, -1.5633749499686009, 4.7792321366766828}},
    {{0.87882297515178165, 1.6208559950163826, 2.3145104378748131}},
    {{0.44433760409228779, -0.31554279996629886, 1.57402526932398}},
    {{1.638352178549096, -0.67548569960660443, 4.0285056972457989}},
    {{0.52368037779904475, 0.93149284235795715, 2.3133830921919634}},
    {{0.32673168342736675, -1.1404283873919192, 2.3967435836265074}},
    {{-0.16027055806538026, 0.6671342758931621, 2.0272900130893503}},
    {{0.12997648671277809, 1.2333757062809056, 1.4556781886421739}},
    {{0.49323071450801942, -1.6217697153731383, 2.9575681610190485}},
    {{-1.6384324567501696, 0.87714210882317667, 5.1691044370531856}},
    {{0.35814714674686066, -1.2085311617495389, 1.6162696795300329}},
    {{-1.8129615343867809, -0.45025666686133742, 4.4511525560649847}},
    {{1.2813965057096925, -1.0410738524275165, 3.8686034407209471}},
    {{-0.27184173295661412, 1.123094035398069, 2.4174258839177618}},
    {{0.017980716450363504, -1.483737693463768, 3.6841867895614415}},
    {{-0.43859206380533272, -0.58057777042006264, 1.4447020441952545}},
    {{-0.62659045901431254, -0.79090533404170438, 1.3231154022038356}},
    {{-0.55604152966545817, 0.59841332538611036, 1.0368001366342658}},
    {{-0.70789340956467872, -1.0401729307886112, 3.6815588844735379}},
    {{-1.0365886171579459, 0.41579077406598713, 1.7225752368462439}},
    {{-0.040902481661690748, -0.81105029251868244, 1.6990987249525662}},
    {{0.26870160561775674, 1.7586856429716493, 3.0888766915721781}},
    {{0.60452568190464262, -1.251164273613681, 2.8637471398162546}},
    {{-0.15169155402538531, 0.6776094530779001, 0.85572270051811117}},
    {{-0.45490674091444971, -0.86669444975178134, 1.352657216584622}},
    {{0.55875032800386348, 1.073462463078545, 1.8411508470869868}},
    {{-0.86500189861238763, -1.0517373457140582, 3.200696695226541}},
    {{0.0010702366820422257, -0.85277297130112706, 2.4108228374034768}},
    {{0.76621755022489213, 1.4673801398678652, 4.3959029474623286}},
    {{-1.9674912204099031, 0.029108838904947636, 2.9744284343012124}},
    {{0.28577240539983284, -0.82830490502253495, 1.1483325727699789}},
    {{1.6411678613204796, -0.90179247094772141, 3.9709030560279435}},
    {{0.14666997202617632, 1.4877975161014028, 4.1865582613201902}},
    {{0.51049778924555478, 0.96182841852061918, 3.0997048095134279}},
    {{1.5695117798758078, 0.88443235643070306, 3.1796396335964081}},
    {{1.7151478836008009, 0.49089242692163193, 3.6291802424254018}},
    {{1.3925548440007356, -0.33457159773975192, 2.3332039281554726}},
    {{-0.32034933628065382, -0.38861357941416141, 0.98785360488601215}},
    {{-0.017278226948460883, -0.5248081856461918, 1.4366210212800039}},
    {{-1.4342142076361519, 1.1001848094706095, 4.4610198450845902}},
    {{-1.0382729218490101, 1.3999740818124162, 3.6306418846074857}},
    {{-1.7536147963093354, -0.39058056853843948, 3.7548603669952856}},
    {{-0.94173126128934126, -0.16373661298909112, 2.4941208373095773}},
    {{1.1351918198046842, -0.97260565845660851, 3.6758866031297215}},
    {{-0.004144488422001753, -0.6884257784343949, 1.883139619717155}},
    {{0.13628645891478208, -1.0592549677314302, 2.5982223308823897}},
    {{1.763122687226313, 0.89378677747637469, 2.2832730562526904}},
    {{-0.56512639042767798, -1.1036572644187215, 1.7948223401042334}},
    {{1.308298519844576, -0.5623452496611322, 4.1544982956191969}},
    {{0.40862545674847245, 1.8629607664061703, 5.0817462790019592}},
    {{-0.56635858963541297, 0.22534753471565039, 1.6487907254617882}},
    {{-1.2032285650338455, 0.13491856887714362, 2.8083685763830806}},
    {{0.33339625262447065, 1.1009301913610434, 2.9262422513833206}},
    {{-0.78103093038090421, -0.039871119670566217, 2.3147428134415438}},
    {{1.4121616168766873, -1.3753129580134944, 2.1348380631953638}},
    {{1.1679366080239153, -1.5578242470383796, 3.6218597618209594}},
    {{-0.50408855442790035, -1.0776509785545911, 2.4413149423958891}},
    {{0.10518266540374181, 0.52327714985270102, 0.67937011808994707}},
    {{-0.88276694667423183, -1.0161549063740536, 1.4904740128471119}},
    {{0.89363206189505617, 0.58265461386154938, 2.3067684160051467}},
    {{1.1973902899965947, -1.3294144711357991, 4.5983205971960981}},
    {{1.4164534461019087, 1.2483879011707113, 5.1131395820349823}},
    {{-0.77302530813691561, -0.0062018709049646882, 1.9056246009571829}},
    {{1.7800663434143482, 0.83289531993774391, 2.3612185639205494}},
    {{-0.76031804780754619, 0.55937277015016074, 1.2855649812332077}},
    {{-0.81337266643384654, -0.17906726035062628, 1.651040777521863}},
    {{-0.028593533645627046, -0.85554498937773937, 0.99036468026440772}},
    {{-0.46273443410615928, 1.1435203310341275, 2.7570711119174733}},
    {{-0.44466358763663344, 0.63577537041645493, 1.7066210316719901}},
    {{1.1033138906569904, -0.10214606405633221, 1.1636399074765424}},
    {{-0.67854826831242554, 0.59196010865290871, 1.4794377971485513}},
    {{1.0446362706595287, 0.15299633446697491, 2.1334542039167101}},
    {{-1.2219873743575644, 0.88974399338413535, 2.9617215159235371}},
    {{-0.89518409343131322, -1.2941848906616213, 2.4403885720645162}},
    {{0.23203676042120716, -1.6118441658615621, 3.6993525413787198}},
    {{-1.8118748462564231, -0.52617671500550445, 2.6868232133503613}},
    {{-1.3798897376098054, 1.3347139669988095, 4.6954452899832342}},
    {{-0.67283204459614065, -0.61307047325904906, 1.8661514720336532}},
    {{-0.85735908788163606, 0.58455489077442724, 2.0443444461993052}},
    {{-1.7674140482950271, -0.67985416358732897, 5.5268016642282145}},
    {{-0.90604493732599956, -1.1798289166178848, 2.8330346936972588}},
    {{-1.7251106468976003, 0.16231988654306964, 5.1065755045341863}},
    {{-0.92411462711494774, 1.1379299815145418, 1.9617421992473443}},
    {{-0.0023822060243490575, 0.67370613651493183, 0.80713255934986206}},
    {{0.81705558255913124, 1.2837625955496439, 3.5611517232087477}},
    {{0.54920758506241851, -0.3783287633961856, 0.75906606623730744}},
    {{-0.64108976423066732, 0.2361292229616147, 1.5471040393570119}},
    {{-0.60260130363273556, -1.5917992805915957, 2.9784499484382647}},
    {{-0.12101262920207424, -1.2377728165336959, 3.3532126129814608}},
    {{0.75342605279492958, 0.13369029797091056, 2.0751207400821139}},
    {{-1.155669235682574, -0.50259863544350281, 3.5782370691495009}},
    {{1.2609906388003176, 0.5082106414002443, 2.7109423385467561}},
    {{-0.41594807081597307, 1.853301271155992, 2.5866354961658051}},
    {{0.56633134677972619, -1.2450775851468461, 1.5636620088715283}},
    {{-0.44199633519538312, -0.52222407763920942, 2.0147475374697295}},
    {{-0.71994601720449758, -0.34873163965275916, 1.3204737283548209}},
    {{0.57949331796193293, 1.7941696214314191, 3.5897749412108859}},
    {{-0.85712368741039557, -0.64398271077122438, 2.1136223924273638}},
    {{0.54766628227792735, 0.8807879562601959, 2.4326004251820161}},
    {{-0.59508006708423877, 0.66009774875417737, 2.5602103515616976}},
    {{1.0275398606082411, 0.44689549363919262, 1.7271110614469212}},
    {{-1.1013956211818479, 1.4745178175794593, 2.4164574718307659}},
    {{0.85730267638509383, 1.6252485296427897, 3.6875017025836709}},
    {{0.66621357296479977, 0.16062673945400957, 1.2471206524719483}},
    {{0.26614894571746411, 0.44956818090532902, 0.81769145765144657}},
    {{-0.39998533939956771, 1.2862546636421708, 2.8840210618485433}},
    {{1.7488829564139372, 0.45569560931141606, 3.7446521545206988}},
    {{0.1077586157554717, 1.0159702103567589, 3.0461470648347979}},
    {{-0.25585356492366262, -1.0692751909873077, 2.4958002142040319}},
    {{0.13298671627613814, 0.63637332443718397, 0.83097704346162349}},
    {{-0.73931421143224296, -1.0504589514758311, 3.4790419281948273}},
    {{-0.38647723141721935, -1.4322082696516309, 3.2568904792661777}},
    {{0.57254813541391714, 0.85849452147724359, 1.8303984754398801}},
    {{-0.00019932395626582006, 0.91677226914708987, 1.6119905295559342}},
    {{-0.21114073452963877, 0.46736149583155495, 1.4146429794792685}},
    {{1.1385757239110141, -1.4001749571408064, 4.204988671960316}},
}};

}  // namespace ngopt::internal
